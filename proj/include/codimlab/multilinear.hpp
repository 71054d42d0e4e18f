#pragma once

/*
 * Multilinear nonassociative monomials (planar binary tree + permutation of
 * variable labels), the symmetric-group action, alternation/symmetrization
 * operators and Young symmetrizers, plus the alternated witness polynomials
 * f_t with their distinguished substitution.
 */

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "codimlab/algebra.hpp"
#include "codimlab/repr.hpp"

namespace codimlab::multilinear {

struct Caps {
    int full = 7;          // full-mode degree cap (dim P_7 = 665280)
    int left_normed = 9;
    int cochar_full = 5;
    int cochar_left_normed = 6;

    static constexpr int kMaxFull = 8;
    static constexpr int kMaxLeftNormed = 10;

    void validate() const;
};

// Full binary tree with n leaves, leaves ordered left to right. Trees of a
// given degree are interned in a catalog ordered by the recursive
// (left subtree size, left key, right key) rule; the left comb is last.
struct PlanarTree {
    int n_leaves = 0;
    // 2n-1 nodes, node 0 is the root; leaf nodes have left == right == -1.
    std::vector<std::int32_t> left, right;
    // leaf slot (0..n-1, left to right) per node; -1 for internal nodes.
    std::vector<std::int32_t> leaf_slot;

    bool is_left_comb() const;
    std::string paren_string(std::span<const int> leaf_labels) const;  // "((1,2),3)"
};

const std::vector<PlanarTree>& tree_catalog(int n);
int tree_count(int n);            // Catalan(n-1)
int left_comb_index(int n);

enum class BasisMode { Full, LeftNormed };

struct Monomial {
    int n = 0;
    int tree = 0;                  // index into tree_catalog(n)
    std::vector<int> vars;         // leaf slot -> variable label, a permutation of 1..n

    auto operator<=>(const Monomial&) const = default;
    std::string to_string() const;
};

std::vector<Monomial> monomial_basis(int n, BasisMode mode, const Caps& caps = {});

// Canonical dense index of a monomial within the full degree-n basis
// (tree-major, then lexicographic in vars).
std::size_t monomial_index_full(const Monomial& m);
std::size_t monomial_index_left_normed(const Monomial& m);

struct Substitution {
    std::vector<algebra::Elem> images;  // image of x_1..x_n

    int degree() const { return static_cast<int>(images.size()); }
    std::string to_string() const;
};

algebra::Elem evaluate(const Monomial& mono, const Substitution& sub,
                       const algebra::AlgebraModel& model);

class Polynomial {
public:
    using Terms = std::map<Monomial, mpq_class>;

    Polynomial() = default;
    static Polynomial monomial(Monomial m, mpq_class coeff = 1);

    void add_term(const Monomial& m, const mpq_class& coeff);  // drops zeros
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    int degree() const;  // 0 when empty

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial scaled(const mpq_class& c) const;
    bool operator==(const Polynomial&) const = default;

private:
    Terms terms_;
};

// sigma as 1-based images: variable label l becomes sigma[l-1].
Polynomial act(const std::vector<int>& sigma, const Polynomial& p);
Monomial act(const std::vector<int>& sigma, const Monomial& m);

int permutation_sign(const std::vector<int>& sigma);

Polynomial alternate(const Polynomial& p, const std::vector<int>& var_set);
Polynomial symmetrize(const Polynomial& p, const std::vector<int>& var_set);

// e_T = R(T) C(T): signed column symmetrization first, then row symmetrization.
Polynomial young_symmetrizer(const repr::Tableau& tableau, const Polynomial& p);

std::map<algebra::Elem, mpq_class> evaluate_polynomial(const Polynomial& p,
                                                       const Substitution& sub,
                                                       const algebra::AlgebraModel& model);

struct Witness {
    Polynomial f;
    Substitution phi;
    int degree = 0;
    int t = 0;
    std::vector<std::vector<int>> alternation_sets;
    std::vector<std::vector<int>> symmetrization_blocks;  // x blocks, then the y block
};

// The degree-n(t) alternated witness for A(m,d,w), with the substitution that
// sends it to z^1_{1,t+1}. n(t) = (m_1 + ... + m_t) d + 1.
Witness build_witness(const algebra::AlgebraParams& params, int t, const Caps& caps = {});

Polynomial symmetrized_witness(const Witness& w);

// Substitutions that can reach a nonzero value: exactly one variable gets a z
// representative and the rest range over {a_1..a_d, b} (plus the unit in
// unital models). Unital models additionally get the all-units substitution
// and one-non-unit substitutions, whose common value survives the unit
// collapse. Degree 1 enumerates plain basis representatives.
std::vector<Substitution> relevant_substitutions(int n, const algebra::AlgebraModel& model);

nlohmann::json polynomial_to_json(const Polynomial& p);

} // namespace codimlab::multilinear
