#include "qgram/error.hpp"

namespace qgram {

const char* err_name(Err e) {
  switch (e) {
    case Err::NegativePowerOfNonMonomial: return "NegativePowerOfNonMonomial";
    case Err::NotInvertible: return "NotInvertible";
    case Err::UnknownMaster: return "UnknownMaster";
    case Err::OrderMismatch: return "OrderMismatch";
    case Err::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Err::EmptyOrder: return "EmptyOrder";
    case Err::UnknownName: return "UnknownName";
    case Err::UnknownId: return "UnknownId";
    case Err::NoLawRecorded: return "NoLawRecorded";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::NotFullPermutation: return "NotFullPermutation";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SemanticError: return "SemanticError";
    case Err::SchemaError: return "SchemaError";
  }
  return "Error";
}

}  // namespace qgram
