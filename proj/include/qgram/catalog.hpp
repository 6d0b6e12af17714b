#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgram/evalmap.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"

namespace qgram {

/*
 * Built-in grammar with its canonical evaluation map, default seed, recorded
 * word counts of the n-th derivative (n starting at 1), and, when one is
 * known, the closed-form count law.
 */
struct CatalogEntry {
  std::string id;
  std::vector<std::string> aliases;
  Grammar grammar;
  EvalMap eval;
  Expr seed;
  std::vector<unsigned long long> counts;
  std::function<unsigned long long(long)> law;
};

const std::vector<CatalogEntry>& catalog();

/* Look up by id or ASCII alias; UnknownId otherwise. */
const CatalogEntry& get_entry(const std::string& id);

/*
 * Word count of the n-th derivative of the default seed, n >= 1: the law
 * when recorded, else the stored table, else NoLawRecorded.
 */
unsigned long long term_count(const std::string& id, long n);

std::vector<std::string> catalog_ids();

}  // namespace qgram
