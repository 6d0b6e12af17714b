#include "qgram/catalog.hpp"

#include <utility>

#include "qgram/oracle.hpp"

namespace qgram {

namespace {

TLetter rel(MasterId m, long off, int sign = +1) {
  return {m, {true, off}, static_cast<std::int8_t>(sign)};
}

TLetter anchored(MasterId m, long off) { return {m, {false, off}, +1}; }

Rule make_rule(long b, const QPoly& c0, std::vector<TSummand> words) {
  Rule r;
  r.a = 1;
  r.b = b;
  r.c0 = c0;
  r.words = std::move(words);
  return r;
}

EvalImage ident_image(const std::string& var) {
  return {+1, Monomial::var(var), 0};
}

EvalImage qj_image(const std::string& var) {
  return {+1, Monomial::var(var), 1};
}

unsigned long long tan_count(long n) {
  if (n % 2 != 0) {
    unsigned long long k = (n - 1) / 2;
    return 2 * k * k * k + 5 * k * k + 2;
  }
  unsigned long long k = n / 2;
  return (k + 2) * (2 * k * k - 2 * k + 1);
}

unsigned long long sec_count(long n) {
  if (n == 1) return 1;
  if (n % 2 != 0) {
    unsigned long long k = (n - 1) / 2;
    return 2 * k * k * k + 5 * k * k - k + 2;
  }
  unsigned long long k = n / 2;
  return 2 * k * k * k + 2 * k * k - 4 * k + 3;
}

unsigned long long cap_sec_count(long n) {
  if (n == 1) return 1;
  if (n == 2) return 3;
  if (n % 2 != 0) {
    unsigned long long k = (n - 1) / 2;
    return (20 * k * k * k + 33 * k * k + k - 6) / 6;
  }
  unsigned long long k = n / 2;
  return (20 * k - 17) * (k + 1) * k / 6;
}

unsigned long long cyc_count(long n) {
  unsigned long long total = 0;
  for (long k = 0; k <= (n + 1) / 2; ++k) total += binom(n + k, 3 * k);
  return total;
}

std::vector<CatalogEntry> make_catalog() {
  const MasterId X = master_intern("x");
  const MasterId Y = master_intern("y");
  const MasterId Z = master_intern("z");
  const MasterId E = master_intern("e");
  const QPoly one(1);
  const QPoly beta = QPoly::var("beta");

  /* x[j] -> q^j * (1 + x[j]*x[j+1]) */
  const Rule tan_rule = make_rule(0, one, {{+1, {}}, {+1, {rel(X, 0), rel(X, 1)}}});
  /* y[j] -> q^j * x[j]*y[j+1] */
  const Rule sec_yrule = make_rule(0, one, {{+1, {rel(X, 0), rel(Y, 1)}}});
  /* y[j] -> q^j * y[j]*x[j+1] */
  const Rule swap_yrule = make_rule(0, one, {{+1, {rel(Y, 0), rel(X, 1)}}});

  const Expr seed_x0(Word::letter(X, 0));
  const Expr seed_y0(Word::letter(Y, 0));
  const Expr seed_e0(Word::letter(E, 0));

  EvalMap ev_x;
  ev_x.set(X, ident_image("x"));

  EvalMap ev_xy;
  ev_xy.set(X, ident_image("x"));
  ev_xy.set(Y, ident_image("y"));

  EvalMap ev_maj;
  ev_maj.set(X, qj_image("x"));
  ev_maj.set(Y, qj_image("y"));

  EvalMap ev_xyze;
  ev_xyze.set(X, ident_image("x"));
  ev_xyze.set(Y, ident_image("y"));
  ev_xyze.set(Z, ident_image("z"));
  ev_xyze.set(E, ident_image("e"));

  std::vector<CatalogEntry> out;

  {
    CatalogEntry c;
    c.id = "G_tan";
    c.grammar = {c.id, {X}, {{X, tan_rule}}, Order::DIO};
    c.eval = ev_x;
    c.seed = seed_x0;
    c.counts = {2, 3, 9, 20, 38, 65, 101, 150, 210, 287, 377};
    c.law = tan_count;
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_tan'";
    c.aliases = {"G_tan_p"};
    c.grammar = {c.id, {X}, {{X, tan_rule}}, Order::LPO};
    c.eval = ev_x;
    c.seed = seed_x0;
    c.counts = {2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
    c.law = [](long n) {
      return static_cast<unsigned long long>(sequence_term("fibonacci", n + 2));
    };
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_sec";
    c.grammar = {c.id, {X, Y}, {{X, tan_rule}, {Y, sec_yrule}}, Order::DIO};
    c.eval = ev_xy;
    c.seed = seed_y0;
    c.counts = {1, 3, 8, 19, 36, 63, 98, 147, 206, 283, 372};
    c.law = sec_count;
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_sec'";
    c.aliases = {"G_sec_p"};
    c.grammar = {c.id, {X, Y}, {{X, tan_rule}, {Y, sec_yrule}}, Order::LPO};
    c.eval = ev_xy;
    c.seed = seed_y0;
    c.counts = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    c.law = [](long n) {
      return static_cast<unsigned long long>(sequence_term("fibonacci", n + 1));
    };
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_Sec";
    c.grammar = {c.id, {X, Y}, {{X, tan_rule}, {Y, swap_yrule}}, Order::DIO};
    c.eval = ev_xy;
    c.seed = seed_y0;
    c.counts = {1, 3, 8, 23, 48, 86, 139, 210, 301, 415, 554};
    c.law = cap_sec_count;
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_Sec'";
    c.aliases = {"G_Sec_p"};
    c.grammar = {c.id, {X, Y}, {{X, tan_rule}, {Y, swap_yrule}}, Order::LPO};
    c.eval = ev_xy;
    c.seed = seed_y0;
    c.counts = {1, 3, 8, 21, 53, 132, 325, 795, 1936, 4701, 11393};
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_tan∪sec";
    c.aliases = {"G_tan_sec"};
    c.grammar = {c.id, {X, Y}, {{X, tan_rule}, {Y, sec_yrule}}, Order::DIO};
    c.eval = ev_xy;
    c.seed = seed_x0;
    c.counts = {2, 3, 9, 20, 38, 65, 101, 150, 210, 287, 377};
    c.law = tan_count;
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_maj";
    const Rule maj_rule = make_rule(0, one, {{+1, {anchored(X, 0), anchored(Y, 0)}}});
    c.grammar = {c.id, {X, Y}, {{X, maj_rule}, {Y, maj_rule}}, Order::LPO};
    c.eval = ev_maj;
    c.seed = seed_x0;
    c.counts = {1, 2, 6, 20, 73, 283, 1147, 4814, 20774};
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_inv";
    c.grammar = {c.id, {X, Y}, {{X, swap_yrule}, {Y, swap_yrule}}, Order::AIO};
    c.eval = ev_xy;
    c.seed = seed_x0;
    c.counts = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    c.law = [](long n) { return 1ull << (n - 1); };
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_cyc";
    const Rule erule = make_rule(0, beta, {{+1, {rel(E, 0), rel(Z, 1)}}});
    c.grammar = {c.id,
                 {X, Y, Z, E},
                 {{X, swap_yrule}, {Y, swap_yrule}, {Z, swap_yrule}, {E, erule}},
                 Order::KSO};
    c.eval = ev_xyze;
    c.seed = seed_e0;
    c.counts = {1, 2, 5, 12, 28, 65, 151, 351, 816, 1897};
    c.law = cyc_count;
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_binv";
    const Rule xrule = make_rule(0, one, {{+1, {rel(X, 1)}}});
    const Rule yrule = make_rule(0, one, {{+1, {rel(Y, 0)}}});
    c.grammar = {c.id, {X, Y}, {{X, xrule}, {Y, yrule}}, Order::KSO};
    c.eval = ev_xy;
    c.seed = seed_x0;
    c.counts = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    c.law = [](long) { return 1ull; };
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_AndI";
    const Rule xrule = make_rule(0, one, {{+1, {rel(X, 0), rel(Y, 1)}}});
    const Rule yrule = make_rule(0, one, {{+1, {rel(X, 0)}}});
    c.grammar = {c.id, {X, Y}, {{X, xrule}, {Y, yrule}}, Order::AIO};
    c.eval = ev_xy;
    c.seed = seed_x0;
    c.counts = {1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
    c.law = [](long n) {
      return static_cast<unsigned long long>(sequence_term("motzkin", n));
    };
    out.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.id = "G_AndII";
    const Rule xrule = make_rule(0, one, {{+1, {rel(X, 0), rel(Y, 1)}}});
    const Rule yrule = make_rule(1, one, {{+1, {rel(X, 1)}}});
    c.grammar = {c.id, {X, Y}, {{X, xrule}, {Y, yrule}}, Order::AIO};
    c.eval = ev_xy;
    c.seed = seed_x0;
    c.counts = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    c.law = [](long n) {
      return static_cast<unsigned long long>(sequence_term("fibonacci", n + 1));
    };
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& get_entry(const std::string& id) {
  for (const CatalogEntry& c : catalog()) {
    if (c.id == id) return c;
    for (const std::string& a : c.aliases)
      if (a == id) return c;
  }
  fail(Err::UnknownId, "no catalog grammar named " + id);
}

unsigned long long term_count(const std::string& id, long n) {
  const CatalogEntry& c = get_entry(id);
  if (n < 1) fail(Err::BoundExceeded, "term_count needs n >= 1");
  if (c.law) return c.law(n);
  if (n <= static_cast<long>(c.counts.size())) return c.counts[n - 1];
  fail(Err::NoLawRecorded,
       c.id + " has recorded counts only up to n = " +
           std::to_string(c.counts.size()));
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const CatalogEntry& c : catalog()) out.push_back(c.id);
  return out;
}

}  // namespace qgram
