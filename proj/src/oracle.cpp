#include "qgram/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace qgram {

namespace {

void check_distinct_positive(const Perm& p) {
  Perm s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0)
      fail(Err::SemanticError, "word entries must be positive integers");
    if (i > 0 && s[i] == s[i - 1])
      fail(Err::SemanticError, "word entries must be distinct");
  }
}

void check_full(const Perm& p) {
  Perm s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1)
      fail(Err::NotFullPermutation, "needs a permutation of 1..n");
}

/* True at each position whose entry is below everything to its right. */
std::vector<char> rl_minima(const Perm& p) {
  std::vector<char> mins(p.size(), 0);
  int cur = INT_MAX;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] < cur) {
      mins[i] = 1;
      cur = p[i];
    }
  }
  return mins;
}

/*
 * Accumulate f over all permutations of 1..n.  The parallel path splits on
 * the first entry; exact addition commutes, so the result is identical to
 * the serial one.
 */
template <class F>
QPoly sum_over_sn(int n, F f) {
  QPoly acc;
  if (n == 0) {
    f(Perm{}, acc);
    return acc;
  }
#ifdef _OPENMP
  if (n >= 7) {
    std::vector<QPoly> partial(n);
#pragma omp parallel for schedule(dynamic)
    for (int first = 1; first <= n; ++first) {
      Perm rest;
      rest.reserve(n - 1);
      for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
      Perm full(n);
      full[0] = first;
      do {
        std::copy(rest.begin(), rest.end(), full.begin() + 1);
        f(full, partial[first - 1]);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    for (const QPoly& part : partial) acc += part;
    return acc;
  }
#endif
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    f(p, acc);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

}  // namespace

PermStats perm_stats(const Perm& p) {
  check_distinct_positive(p);
  const int n = static_cast<int>(p.size());
  PermStats s;

  for (int i = 0; i <= n; ++i) {
    int a = i == 0 ? 0 : p[i - 1];
    int b = i == n ? 0 : p[i];
    if (a < b) ++s.asc;
    if (a > b) ++s.des;
  }
  for (int i = 1; i < n; ++i)
    if (p[i - 1] > p[i]) s.maj += i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++s.inv;
  for (int i = 0; i < n; ++i) {
    if (p[i] > i + 1) ++s.exc;
    if (p[i] < i + 1) ++s.drop;
    if (p[i] == i + 1) ++s.fix;
  }

  std::vector<char> mins = rl_minima(p);
  std::vector<char> isolated(n, 0);
  for (int i = 0; i < n; ++i) {
    if (mins[i]) ++s.rlmin;
    if (mins[i] && (i == 0 || mins[i - 1])) {
      isolated[i] = 1;
      ++s.isol;
    }
  }
  for (int i = 0; i < n; ++i) {
    int prev = i == 0 ? 0 : p[i - 1];
    if (prev < p[i] && !isolated[i]) ++s.iasc;
  }
  return s;
}

int cycle_count(const Perm& p) {
  check_full(p);
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (int m = 1; m <= n; ++m) {
    if (seen[m]) continue;
    ++cycles;
    int cur = m;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = p[cur - 1];
    }
  }
  return cycles;
}

Perm psi_cycle_map(const Perm& p) {
  check_full(p);
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n + 1, 0);
  Perm out;
  out.reserve(n);
  for (int m = 1; m <= n; ++m) {
    if (seen[m]) continue;
    int cur = p[m - 1];
    seen[m] = 1;
    while (cur != m) {
      seen[cur] = 1;
      out.push_back(cur);
      cur = p[cur - 1];
    }
    out.push_back(m);
  }
  return out;
}

QPoly eulerian_poly(int n, const std::string& stat) {
  if (n < 0 || n > 8)
    fail(Err::BoundExceeded, "eulerian_poly handles 0 <= n <= 8");
  bool use_maj = stat == "maj";
  if (!use_maj && stat != "inv")
    fail(Err::UnknownName, "statistic must be maj or inv, got " + stat);
  const VarId q = q_id(), x = var_intern("x"), y = var_intern("y");
  return sum_over_sn(n, [&](const Perm& p, QPoly& acc) {
    PermStats s = perm_stats(p);
    Monomial m;
    m.set(q, use_maj ? s.maj : s.inv);
    m.set(x, s.asc);
    m.set(y, s.des);
    acc.add_term(m, Int(1));
  });
}

QPoly roselle_poly(int n) {
  if (n < 0 || n > 7) fail(Err::BoundExceeded, "roselle_poly handles 0 <= n <= 7");
  const VarId q = q_id(), x = var_intern("x"), y = var_intern("y"),
              z = var_intern("z"), b = var_intern("beta");
  return sum_over_sn(n, [&](const Perm& p, QPoly& acc) {
    PermStats s = perm_stats(p);
    Monomial m;
    m.set(q, s.inv);
    m.set(x, s.iasc);
    m.set(y, s.des - 1);
    m.set(z, s.isol);
    m.set(b, s.rlmin);
    acc.add_term(m, Int(1));
  });
}

namespace {

std::vector<Perm> andre_words(const std::vector<int>& labels, AndreKind kind) {
  if (labels.size() <= 1) return {labels};
  const int m = labels.front();
  std::vector<int> rest(labels.begin() + 1, labels.end());
  const int r = static_cast<int>(rest.size());
  const int pivot_idx = kind == AndreKind::I ? r - 1 : 0;

  std::vector<Perm> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (mask & (1u << pivot_idx)) continue;  // the pivot stays on the right
    std::vector<int> left, right;
    for (int i = 0; i < r; ++i) ((mask >> i) & 1u ? left : right).push_back(rest[i]);
    std::vector<Perm> ls = andre_words(left, kind);
    std::vector<Perm> rs = andre_words(right, kind);
    for (const Perm& a : ls) {
      for (const Perm& b : rs) {
        Perm w;
        w.reserve(labels.size());
        w.insert(w.end(), a.begin(), a.end());
        w.push_back(m);
        w.insert(w.end(), b.begin(), b.end());
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

bool is_andre_span(const Perm& p, int lo, int hi, AndreKind kind) {
  if (hi - lo <= 1) return true;
  int mpos = lo;
  for (int i = lo; i < hi; ++i)
    if (p[i] < p[mpos]) mpos = i;
  int pivot;
  if (kind == AndreKind::I) {
    pivot = lo;
    for (int i = lo; i < hi; ++i)
      if (p[i] > p[pivot]) pivot = i;
  } else {
    int lo1 = mpos, lo2 = -1;  // smallest and second smallest positions
    for (int i = lo; i < hi; ++i) {
      if (i == lo1) continue;
      if (lo2 < 0 || p[i] < p[lo2]) lo2 = i;
    }
    pivot = lo2;
  }
  if (pivot < mpos) return false;
  return is_andre_span(p, lo, mpos, kind) && is_andre_span(p, mpos + 1, hi, kind);
}

}  // namespace

std::vector<Perm> andre_perms(int n, AndreKind kind) {
  if (n < 0 || n > 9) fail(Err::BoundExceeded, "andre_perms handles 0 <= n <= 9");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Perm> out = andre_words(labels, kind);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_andre(const Perm& p, AndreKind kind) {
  check_distinct_positive(p);
  return is_andre_span(p, 0, static_cast<int>(p.size()), kind);
}

QPoly andre_perm_poly(int n, AndreKind kind) {
  const VarId q = q_id(), t = var_intern("t");
  QPoly acc;
  for (const Perm& p : andre_perms(n, kind)) {
    PermStats s = perm_stats(p);
    Monomial m;
    m.set(q, s.inv);
    m.set(t, s.des);
    acc.add_term(m, Int(1));
  }
  return acc;
}

namespace {

Tree build_tree(const Perm& p, int lo, int hi) {
  if (lo >= hi) return nullptr;
  int mpos = lo;
  for (int i = lo; i < hi; ++i)
    if (p[i] < p[mpos]) mpos = i;
  auto node = std::make_unique<TreeNode>();
  node->label = p[mpos];
  node->left = build_tree(p, lo, mpos);
  node->right = build_tree(p, mpos + 1, hi);
  return node;
}

void inorder(const TreeNode* t, Perm& out) {
  if (!t) return;
  inorder(t->left.get(), out);
  out.push_back(t->label);
  inorder(t->right.get(), out);
}

int count_less(const TreeNode* t, int x) {
  if (!t) return 0;
  return (t->label < x ? 1 : 0) + count_less(t->left.get(), x) +
         count_less(t->right.get(), x);
}

void inv_walk(const TreeNode* t,
              std::vector<std::pair<const TreeNode*, bool>>& path, int& acc) {
  for (const auto& [anc, went_left] : path) {
    if (went_left) {
      ++acc;  // the ancestor's left child lies on the path
      acc += count_less(anc->right.get(), t->label);
    }
  }
  if (t->left) {
    path.push_back({t, true});
    inv_walk(t->left.get(), path, acc);
    path.pop_back();
  }
  if (t->right) {
    path.push_back({t, false});
    inv_walk(t->right.get(), path, acc);
    path.pop_back();
  }
}

int max_label(const TreeNode* t) {
  if (!t) return 0;
  return std::max({t->label, max_label(t->left.get()), max_label(t->right.get())});
}

int min_label(const TreeNode* t) {
  if (!t) return INT_MAX;
  return std::min({t->label, min_label(t->left.get()), min_label(t->right.get())});
}

}  // namespace

Tree psi_tree(const Perm& p) {
  check_distinct_positive(p);
  return build_tree(p, 0, static_cast<int>(p.size()));
}

Perm tree_to_perm(const TreeNode* t) {
  Perm out;
  inorder(t, out);
  return out;
}

int tree_inv(const TreeNode* t) {
  if (!t) return 0;
  int acc = 0;
  std::vector<std::pair<const TreeNode*, bool>> path;
  inv_walk(t, path, acc);
  return acc;
}

TreeShape tree_leaf_deg1(const TreeNode* t) {
  TreeShape s;
  if (!t) return s;
  int kids = (t->left ? 1 : 0) + (t->right ? 1 : 0);
  if (kids == 0) s.leaves = 1;
  if (kids == 1) s.deg1 = 1;
  TreeShape l = tree_leaf_deg1(t->left.get());
  TreeShape r = tree_leaf_deg1(t->right.get());
  s.leaves += l.leaves + r.leaves;
  s.deg1 += l.deg1 + r.deg1;
  return s;
}

bool is_andre_tree(const TreeNode* t, AndreKind kind) {
  if (!t) return true;
  if (t->left || t->right) {
    if (kind == AndreKind::I) {
      if (!(max_label(t->left.get()) < max_label(t->right.get()))) return false;
    } else {
      if (!(min_label(t->left.get()) > min_label(t->right.get()))) return false;
    }
  }
  return is_andre_tree(t->left.get(), kind) && is_andre_tree(t->right.get(), kind);
}

QPoly andre_tree_poly(int n, AndreKind kind) {
  if (n < 0 || n > 8)
    fail(Err::BoundExceeded, "andre_tree_poly handles 0 <= n <= 8");
  const VarId q = q_id(), x = var_intern("x"), y = var_intern("y");
  return sum_over_sn(n, [&](const Perm& p, QPoly& acc) {
    Tree t = psi_tree(p);
    if (!is_andre_tree(t.get(), kind)) return;
    TreeShape shape = tree_leaf_deg1(t.get());
    Monomial m;
    m.set(q, tree_inv(t.get()));
    m.set(x, shape.leaves);
    m.set(y, shape.deg1);
    acc.add_term(m, Int(1));
  });
}

unsigned long long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) /
        static_cast<unsigned long long>(i);
  }
  return r;
}

long long sequence_term(const std::string& name, int n) {
  if (n < 0) fail(Err::BoundExceeded, "sequence index must be at least 0");
  if (name == "motzkin") {
    if (n > 42) fail(Err::BoundExceeded, "motzkin overflows past n = 42");
    std::vector<long long> m{1};
    for (int k = 0; k < n; ++k) {
      long long next = m[k];
      for (int i = 0; i + 1 <= k; ++i) next += m[i] * m[k - 1 - i];
      m.push_back(next);
    }
    return m[n];
  }
  if (name == "fibonacci") {
    if (n > 90) fail(Err::BoundExceeded, "fibonacci overflows past n = 90");
    long long a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
      long long c = a + b;
      a = b;
      b = c;
    }
    return a;
  }
  if (name == "euler") {
    if (n > 23) fail(Err::BoundExceeded, "euler overflows past n = 23");
    std::vector<long long> e{1, 1};
    for (int m = 1; m + 1 <= n; ++m) {
      long long next = e[m];
      for (int k = 0; k <= m - 2; ++k)
        next += static_cast<long long>(binom(m - 1, k)) * e[k + 1] * e[m - 1 - k];
      e.push_back(next);
    }
    return e[n];
  }
  fail(Err::UnknownName, "no sequence named " + name);
}

}  // namespace qgram
