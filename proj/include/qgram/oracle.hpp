#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qgram/qpoly.hpp"

namespace qgram {

/* Word of distinct positive integers; a full permutation uses 1..n. */
using Perm = std::vector<int>;

/*
 * asc and des pad the word with a zero at both ends, so asc + des = n + 1.
 * maj sums the plain internal descent positions and inv counts inversions.
 * exc, drop and fix compare each entry with its position.  iasc, isol and
 * rlmin come from the bar decomposition that closes a block after every
 * right-to-left minimum: rlmin counts blocks, isol counts singleton blocks,
 * and iasc counts ascents whose top is not a singleton, so iasc + isol = asc.
 */
struct PermStats {
  int asc = 0, des = 0, maj = 0, inv = 0;
  int exc = 0, drop = 0, fix = 0;
  int iasc = 0, isol = 0, rlmin = 0;
};

PermStats perm_stats(const Perm& p);

/* Functional cycle count; requires a permutation of 1..n. */
int cycle_count(const Perm& p);

/*
 * Write each cycle with its smallest element last, sort the cycles by their
 * smallest elements, erase the parentheses.  Requires a permutation of 1..n.
 * Under this map drop = des - 1, exc = iasc, fix = isol and cyc = rlmin.
 */
Perm psi_cycle_map(const Perm& p);

/* Sum of q^stat x^asc y^des over all of S_n, stat is "maj" or "inv", n <= 8. */
QPoly eulerian_poly(int n, const std::string& stat);

/* Sum of q^inv x^iasc y^(des-1) z^isol beta^rlmin over S_n, n <= 7. */
QPoly roselle_poly(int n);

enum class AndreKind { I, II };

/*
 * A word is in the family when, splitting at the minimum into tau min tau',
 * both parts are in the family and the pivot of the remaining letters lies
 * in tau': the maximum for kind I, the minimum for kind II.
 */
std::vector<Perm> andre_perms(int n, AndreKind kind);  // n <= 9
bool is_andre(const Perm& p, AndreKind kind);

/* Sum of t^des q^inv over the kind's permutations of 1..n. */
QPoly andre_perm_poly(int n, AndreKind kind);

struct TreeNode {
  int label = 0;
  std::unique_ptr<TreeNode> left, right;
};
using Tree = std::unique_ptr<TreeNode>;

/*
 * Increasing binary tree of a word: the minimum becomes the root, the part
 * left of it the left subtree, the rest the right subtree.  Inverse of the
 * in-order reading, so it is a bijection onto increasing binary trees.
 */
Tree psi_tree(const Perm& p);
Perm tree_to_perm(const TreeNode* t);

/*
 * Inversions of a tree: pairs i > j such that j either hangs in a subtree
 * to the right of the path from the root to i, or sits on that path with
 * its left child also on the path.  Matches inv of the in-order word.
 */
int tree_inv(const TreeNode* t);

struct TreeShape {
  int leaves = 0;
  int deg1 = 0;
};
TreeShape tree_leaf_deg1(const TreeNode* t);

/*
 * Kind I: every internal vertex has max(left) < max(right), empty max 0.
 * Kind II: every internal vertex has min(left) > min(right), empty min
 * infinite.  Both force one-child vertices to carry only a right child.
 */
bool is_andre_tree(const TreeNode* t, AndreKind kind);

/* Sum of x^leaves y^deg1 q^inv over the kind's trees on 1..n, n <= 8. */
QPoly andre_tree_poly(int n, AndreKind kind);

/* Exact binomial coefficient, zero outside 0 <= k <= n. */
unsigned long long binom(long n, long k);

/* Named sequences: motzkin (n <= 42), fibonacci (n <= 90), euler (n <= 23). */
long long sequence_term(const std::string& name, int n);

}  // namespace qgram
