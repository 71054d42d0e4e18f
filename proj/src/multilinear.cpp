#include "codimlab/multilinear.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace codimlab::multilinear {

void Caps::validate() const {
    require(full >= 1 && full <= kMaxFull, ErrorCode::InvalidParams,
            "full-mode cap must lie in [1," + std::to_string(kMaxFull) + "]");
    require(left_normed >= 1 && left_normed <= kMaxLeftNormed, ErrorCode::InvalidParams,
            "left-normed cap must lie in [1," + std::to_string(kMaxLeftNormed) + "]");
    require(cochar_full <= full && cochar_left_normed <= left_normed, ErrorCode::InvalidParams,
            "cocharacter caps cannot exceed the rank caps");
}

bool PlanarTree::is_left_comb() const {
    for (std::size_t v = 0; v < left.size(); ++v) {
        if (left[v] < 0) continue;  // leaf
        if (leaf_slot[static_cast<std::size_t>(right[v])] < 0) return false;
    }
    return true;
}

std::string PlanarTree::paren_string(std::span<const int> leaf_labels) const {
    auto rec = [&](auto&& self, int node) -> std::string {
        if (leaf_slot[static_cast<std::size_t>(node)] >= 0)
            return std::to_string(leaf_labels[static_cast<std::size_t>(
                leaf_slot[static_cast<std::size_t>(node)])]);
        return "(" + self(self, left[static_cast<std::size_t>(node)]) + "," +
               self(self, right[static_cast<std::size_t>(node)]) + ")";
    };
    return rec(rec, 0);
}

namespace {

PlanarTree leaf_tree() {
    PlanarTree t;
    t.n_leaves = 1;
    t.left = {-1};
    t.right = {-1};
    t.leaf_slot = {0};
    return t;
}

PlanarTree combine(const PlanarTree& l, const PlanarTree& r) {
    PlanarTree t;
    t.n_leaves = l.n_leaves + r.n_leaves;
    const int ln = static_cast<int>(l.left.size());
    const int rn = static_cast<int>(r.left.size());
    t.left.resize(1 + static_cast<std::size_t>(ln) + rn);
    t.right.resize(t.left.size());
    t.leaf_slot.resize(t.left.size());
    t.left[0] = 1;
    t.right[0] = 1 + ln;
    t.leaf_slot[0] = -1;
    for (int v = 0; v < ln; ++v) {
        t.left[static_cast<std::size_t>(1 + v)] = l.left[static_cast<std::size_t>(v)] < 0
                                                      ? -1 : l.left[static_cast<std::size_t>(v)] + 1;
        t.right[static_cast<std::size_t>(1 + v)] = l.right[static_cast<std::size_t>(v)] < 0
                                                       ? -1 : l.right[static_cast<std::size_t>(v)] + 1;
        t.leaf_slot[static_cast<std::size_t>(1 + v)] = l.leaf_slot[static_cast<std::size_t>(v)];
    }
    const int off = 1 + ln;
    for (int v = 0; v < rn; ++v) {
        t.left[static_cast<std::size_t>(off + v)] = r.left[static_cast<std::size_t>(v)] < 0
                                                        ? -1 : r.left[static_cast<std::size_t>(v)] + off;
        t.right[static_cast<std::size_t>(off + v)] = r.right[static_cast<std::size_t>(v)] < 0
                                                         ? -1 : r.right[static_cast<std::size_t>(v)] + off;
        const int slot = r.leaf_slot[static_cast<std::size_t>(v)];
        t.leaf_slot[static_cast<std::size_t>(off + v)] = slot < 0 ? -1 : slot + l.n_leaves;
    }
    return t;
}

std::mutex catalog_mutex;
std::map<int, std::vector<PlanarTree>> catalog_cache;

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

// Lexicographic rank of a permutation of 1..n.
std::size_t lehmer_rank(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++smaller;
        rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
    }
    return rank;
}

} // namespace

const std::vector<PlanarTree>& tree_catalog(int n) {
    require(n >= 1, ErrorCode::InvalidParams, "tree degree must be >= 1");
    // lock-free fast path; map nodes are stable once inserted
    thread_local std::map<int, const std::vector<PlanarTree>*> local;
    if (auto hit = local.find(n); hit != local.end()) return *hit->second;

    std::lock_guard<std::mutex> lock(catalog_mutex);
    // bottom-up so smaller catalogs are available while combining
    for (int k = 1; k <= n; ++k) {
        if (catalog_cache.contains(k)) continue;
        std::vector<PlanarTree> out;
        if (k == 1) {
            out.push_back(leaf_tree());
        } else {
            for (int ls = 1; ls <= k - 1; ++ls) {
                const auto& lcat = catalog_cache.at(ls);
                const auto& rcat = catalog_cache.at(k - ls);
                for (const auto& l : lcat)
                    for (const auto& r : rcat) out.push_back(combine(l, r));
            }
        }
        catalog_cache.emplace(k, std::move(out));
    }
    const auto& entry = catalog_cache.at(n);
    local.emplace(n, &entry);
    return entry;
}

int tree_count(int n) { return static_cast<int>(tree_catalog(n).size()); }

int left_comb_index(int n) { return tree_count(n) - 1; }

std::string Monomial::to_string() const {
    return tree_catalog(n)[static_cast<std::size_t>(tree)].paren_string(vars);
}

std::vector<Monomial> monomial_basis(int n, BasisMode mode, const Caps& caps) {
    caps.validate();
    require(n >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    const int cap = mode == BasisMode::Full ? caps.full : caps.left_normed;
    require(n <= cap, ErrorCode::CapExceeded,
            "degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));

    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 1);

    std::vector<Monomial> out;
    const int t_begin = mode == BasisMode::Full ? 0 : left_comb_index(n);
    const int t_end = mode == BasisMode::Full ? tree_count(n) : left_comb_index(n) + 1;
    out.reserve(static_cast<std::size_t>(t_end - t_begin) * factorial(n));
    for (int t = t_begin; t < t_end; ++t) {
        std::vector<int> perm = ident;
        do {
            out.push_back(Monomial{n, t, perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::size_t monomial_index_full(const Monomial& m) {
    return static_cast<std::size_t>(m.tree) * factorial(m.n) + lehmer_rank(m.vars);
}

std::size_t monomial_index_left_normed(const Monomial& m) {
    return lehmer_rank(m.vars);
}

std::string Substitution::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) s += ",";
        s += images[i].to_string();
    }
    return s + "]";
}

algebra::Elem evaluate(const Monomial& mono, const Substitution& sub,
                       const algebra::AlgebraModel& model) {
    require(sub.degree() == mono.n, ErrorCode::DegreeMismatch,
            "substitution arity does not match the monomial degree");
    const PlanarTree& tree = tree_catalog(mono.n)[static_cast<std::size_t>(mono.tree)];
    auto rec = [&](auto&& self, int node) -> algebra::Elem {
        const int slot = tree.leaf_slot[static_cast<std::size_t>(node)];
        if (slot >= 0)
            return sub.images[static_cast<std::size_t>(mono.vars[static_cast<std::size_t>(slot)] - 1)];
        const algebra::Elem l = self(self, tree.left[static_cast<std::size_t>(node)]);
        if (l.is_zero()) return l;
        const algebra::Elem r = self(self, tree.right[static_cast<std::size_t>(node)]);
        if (r.is_zero()) return r;
        return model.multiply(l, r);
    };
    return rec(rec, 0);
}

Polynomial Polynomial::monomial(Monomial m, mpq_class coeff) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.n; }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Monomial act(const std::vector<int>& sigma, const Monomial& m) {
    require(static_cast<int>(sigma.size()) == m.n, ErrorCode::DegreeMismatch,
            "permutation degree does not match the monomial");
    Monomial out = m;
    for (auto& v : out.vars) v = sigma[static_cast<std::size_t>(v - 1)];
    return out;
}

Polynomial act(const std::vector<int>& sigma, const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(act(sigma, m), c);
    return out;
}

int permutation_sign(const std::vector<int>& sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

// Applies fn(sigma, sign) for every permutation of `vars` extended by the
// identity to degree n.
void for_each_subset_permutation(int n, const std::vector<int>& vars,
                                 const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    require(!sorted.empty(), ErrorCode::InvalidParams, "variable set must be nonempty");
    require(sorted.front() >= 1 && sorted.back() <= n, ErrorCode::DegreeMismatch,
            "variable set out of range");
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        require(sorted[i] != sorted[i + 1], ErrorCode::InvalidParams,
                "variable set has repeats");

    std::vector<int> arrangement = sorted;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    do {
        std::iota(sigma.begin(), sigma.end(), 1);
        int inversions = 0;
        for (std::size_t i = 0; i < arrangement.size(); ++i) {
            sigma[static_cast<std::size_t>(sorted[i] - 1)] = arrangement[i];
            for (std::size_t j = i + 1; j < arrangement.size(); ++j)
                if (arrangement[i] > arrangement[j]) ++inversions;
        }
        fn(sigma, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

} // namespace

Polynomial alternate(const Polynomial& p, const std::vector<int>& var_set) {
    if (p.empty()) return p;
    Polynomial out;
    for_each_subset_permutation(p.degree(), var_set,
                                [&](const std::vector<int>& sigma, int sign) {
                                    for (const auto& [m, c] : p.terms())
                                        out.add_term(act(sigma, m), sign * c);
                                });
    return out;
}

Polynomial symmetrize(const Polynomial& p, const std::vector<int>& var_set) {
    if (p.empty()) return p;
    Polynomial out;
    for_each_subset_permutation(p.degree(), var_set,
                                [&](const std::vector<int>& sigma, int) {
                                    for (const auto& [m, c] : p.terms())
                                        out.add_term(act(sigma, m), c);
                                });
    return out;
}

Polynomial young_symmetrizer(const repr::Tableau& tableau, const Polynomial& p) {
    if (p.empty()) return p;
    require(tableau.size() == p.degree(), ErrorCode::DegreeMismatch,
            "tableau size does not match the polynomial degree");

    // columns of the tableau
    std::vector<std::vector<int>> columns;
    for (std::size_t r = 0; r < tableau.rows.size(); ++r)
        for (std::size_t c = 0; c < tableau.rows[r].size(); ++c) {
            if (columns.size() <= c) columns.resize(c + 1);
            columns[c].push_back(tableau.rows[r][c]);
        }

    // signed column sum C(T), then row sum R(T)
    Polynomial after_c = p;
    for (const auto& col : columns)
        if (col.size() > 1) after_c = alternate(after_c, col);
    Polynomial out = after_c;
    for (const auto& row : tableau.rows)
        if (row.size() > 1) out = symmetrize(out, row);
    return out;
}

std::map<algebra::Elem, mpq_class> evaluate_polynomial(const Polynomial& p,
                                                       const Substitution& sub,
                                                       const algebra::AlgebraModel& model) {
    std::map<algebra::Elem, mpq_class> out;
    for (const auto& [m, c] : p.terms()) {
        const algebra::Elem value = evaluate(m, sub, model);
        if (value.is_zero()) continue;
        auto [it, inserted] = out.try_emplace(value, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Witness build_witness(const algebra::AlgebraParams& params, int t, const Caps& caps) {
    require(t >= 1, ErrorCode::InvalidParams, "witness index t must be >= 1");
    const auto bits = words::prefix(params.word, static_cast<std::size_t>(t));
    const int d = params.d;

    // n(t) = (m_1 + ... + m_t) d + 1
    long long msum = 0;
    for (int j = 0; j < t; ++j) msum += params.m + bits[static_cast<std::size_t>(j)];
    const long long degree = msum * d + 1;
    require(degree <= caps.left_normed, ErrorCode::CapExceeded,
            "witness degree " + std::to_string(degree) + " exceeds the left-normed cap");
    const int n = static_cast<int>(degree);

    // Variable layout, in word order: z, then per step j blocks
    // x^i_{q+1} .. x^i_{q+p_j}, y^j_i for i = 1..d.
    // x_index[i-1][s-1] is the variable of x^i_s; y_index[j-1][i-1] of y^j_i.
    std::vector<std::vector<int>> x_index(static_cast<std::size_t>(d));
    std::vector<std::vector<int>> y_index(static_cast<std::size_t>(t),
                                          std::vector<int>(static_cast<std::size_t>(d)));
    Substitution phi;
    phi.images.resize(static_cast<std::size_t>(n));
    phi.images[0] = algebra::Elem::z(1, 1, 1);
    int next = 2;  // 1-based variable labels; z took 1
    std::vector<std::vector<int>> alternation_sets;
    for (int j = 1; j <= t; ++j) {
        const int p_j = params.m + bits[static_cast<std::size_t>(j - 1)] - 1;
        const int q = static_cast<int>(x_index[0].size());
        for (int i = 1; i <= d; ++i) {
            for (int s = 1; s <= p_j; ++s) {
                x_index[static_cast<std::size_t>(i - 1)].push_back(next);
                phi.images[static_cast<std::size_t>(next - 1)] = algebra::Elem::a(i);
                ++next;
            }
            y_index[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = next;
            phi.images[static_cast<std::size_t>(next - 1)] = algebra::Elem::b();
            ++next;
        }
        // alternation sets of step j: columns s = 1..p_j across the x blocks,
        // with y^j_s joined for s <= d and z joined at (j,s) = (1,1)
        for (int s = 1; s <= p_j; ++s) {
            std::vector<int> set;
            if (j == 1 && s == 1) set.push_back(1);
            for (int i = 1; i <= d; ++i)
                set.push_back(x_index[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q + s - 1)]);
            if (s <= d) set.push_back(y_index[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - 1)]);
            alternation_sets.push_back(std::move(set));
        }
    }
    require(next - 1 == n, ErrorCode::Internal, "witness variable layout out of sync");

    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 1);
    Polynomial f = Polynomial::monomial(Monomial{n, left_comb_index(n), ident});
    for (const auto& set : alternation_sets) f = alternate(f, set);

    Witness w;
    w.f = std::move(f);
    w.phi = std::move(phi);
    w.degree = n;
    w.t = t;
    w.alternation_sets = std::move(alternation_sets);
    for (int i = 0; i < d; ++i) w.symmetrization_blocks.push_back(x_index[static_cast<std::size_t>(i)]);
    std::vector<int> y_all;
    for (const auto& row : y_index) y_all.insert(y_all.end(), row.begin(), row.end());
    w.symmetrization_blocks.push_back(std::move(y_all));
    return w;
}

Polynomial symmetrized_witness(const Witness& w) {
    Polynomial out = w.f;
    for (const auto& block : w.symmetrization_blocks)
        if (block.size() > 1) out = symmetrize(out, block);
    return out;
}

std::vector<Substitution> relevant_substitutions(int n, const algebra::AlgebraModel& model) {
    require(n >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    const int d = model.params().d;
    std::vector<algebra::Elem> alphabet;
    for (int i = 1; i <= d; ++i) alphabet.push_back(algebra::Elem::a(i));
    alphabet.push_back(algebra::Elem::b());
    if (model.unital()) alphabet.push_back(algebra::Elem::unit());
    const auto z_reps = model.z_representatives(n);

    std::vector<Substitution> subs;
    if (n == 1) {
        if (model.unital()) subs.push_back(Substitution{{algebra::Elem::unit()}});
        for (int i = 1; i <= d; ++i) subs.push_back(Substitution{{algebra::Elem::a(i)}});
        subs.push_back(Substitution{{algebra::Elem::b()}});
        for (const auto& z : z_reps) subs.push_back(Substitution{{z}});
        return subs;
    }

    const std::size_t others = static_cast<std::size_t>(n - 1);
    for (const auto& z : z_reps) {
        for (int pos = 0; pos < n; ++pos) {
            std::vector<std::size_t> digits(others, 0);
            for (;;) {
                Substitution sub;
                sub.images.resize(static_cast<std::size_t>(n));
                std::size_t di = 0;
                for (int slot = 0; slot < n; ++slot) {
                    if (slot == pos) sub.images[static_cast<std::size_t>(slot)] = z;
                    else sub.images[static_cast<std::size_t>(slot)] = alphabet[digits[di++]];
                }
                subs.push_back(std::move(sub));
                // increment the mixed-radix counter
                std::size_t carry = 0;
                while (carry < others) {
                    if (++digits[carry] < alphabet.size()) break;
                    digits[carry] = 0;
                    ++carry;
                }
                if (carry == others) break;
            }
        }
    }

    if (model.unital()) {
        // all units, and a single non-unit: every monomial collapses to the
        // same value on these, but the value is nonzero, so they contribute.
        Substitution all_units;
        all_units.images.assign(static_cast<std::size_t>(n), algebra::Elem::unit());
        subs.push_back(std::move(all_units));
        for (int i = 1; i <= d; ++i) {
            Substitution s;
            s.images.assign(static_cast<std::size_t>(n), algebra::Elem::unit());
            s.images[0] = algebra::Elem::a(i);
            subs.push_back(std::move(s));
        }
        Substitution s;
        s.images.assign(static_cast<std::size_t>(n), algebra::Elem::unit());
        s.images[0] = algebra::Elem::b();
        subs.push_back(std::move(s));
    }
    return subs;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json term;
        term["tree"] = m.to_string();
        term["coeff"] = rational_to_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace codimlab::multilinear
