#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "codimlab/error.hpp"
#include "codimlab/multilinear.hpp"
#include "codimlab/util.hpp"

#include "oracles.hpp"

using namespace codimlab;
using algebra::AlgebraModel;
using algebra::AlgebraParams;
using algebra::Elem;
using multilinear::BasisMode;
using multilinear::Monomial;
using multilinear::Polynomial;
using multilinear::Substitution;

namespace {

AlgebraModel model_2_1_zero(int depth = 10) {
    return AlgebraModel::windowed(AlgebraParams::of(2, 1, words::WordSpec::periodic("0")),
                                  depth);
}

Monomial comb_monomial(int n, std::vector<int> vars) {
    return Monomial{n, multilinear::left_comb_index(n), std::move(vars)};
}

std::vector<int> random_perm(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)],
                  p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return p;
}

Polynomial random_poly(int n, Rng& rng) {
    Polynomial p;
    const int terms = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < terms; ++i) {
        const int tree = static_cast<int>(rng.below(
            static_cast<std::uint64_t>(multilinear::tree_count(n))));
        p.add_term(Monomial{n, tree, random_perm(n, rng)},
                   mpq_class(1 + static_cast<long>(rng.below(5)),
                             1 + static_cast<long>(rng.below(3))));
    }
    return p;
}

} // namespace

TEST_CASE("tree catalog sizes are the Catalan numbers") {
    for (int n = 1; n <= 8; ++n)
        CHECK(mpz_class(multilinear::tree_count(n)) ==
              oracles::catalan(static_cast<unsigned long>(n - 1)));
    // the left comb is the last catalog entry
    for (int n = 1; n <= 6; ++n) {
        const auto& cat = multilinear::tree_catalog(n);
        CHECK(cat[static_cast<std::size_t>(multilinear::left_comb_index(n))].is_left_comb());
        int combs = 0;
        for (const auto& t : cat) combs += t.is_left_comb() ? 1 : 0;
        CHECK(combs == 1);  // the comb shape is unique
    }
}

TEST_CASE("monomial basis counts") {
    for (int n = 1; n <= 7; ++n)
        CHECK(mpz_class(static_cast<long>(
                  multilinear::monomial_basis(n, BasisMode::Full).size())) ==
              oracles::full_monomial_count(static_cast<unsigned long>(n)));
    CHECK(multilinear::monomial_basis(3, BasisMode::Full).size() == 12);
    CHECK(multilinear::monomial_basis(1, BasisMode::Full).size() == 1);
    CHECK(multilinear::monomial_basis(5, BasisMode::Full).size() == 1680);
    CHECK(multilinear::monomial_basis(5, BasisMode::LeftNormed).size() == 120);
    multilinear::Caps caps;
    caps.full = 4;
    CHECK_THROWS_AS(multilinear::monomial_basis(5, BasisMode::Full, caps), Error);
}

TEST_CASE("monomial indices match enumeration order") {
    for (BasisMode mode : {BasisMode::Full, BasisMode::LeftNormed}) {
        const auto basis = multilinear::monomial_basis(4, mode);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const std::size_t idx = mode == BasisMode::Full
                                        ? multilinear::monomial_index_full(basis[i])
                                        : multilinear::monomial_index_left_normed(basis[i]);
            CHECK(idx == i);
        }
    }
}

TEST_CASE("tree paren strings") {
    const auto basis = multilinear::monomial_basis(3, BasisMode::Full);
    // canonical order puts x1(x2 x3) shapes before the comb
    CHECK(basis.front().to_string() == "(1,(2,3))");
    CHECK(basis.back().to_string() == "((3,2),1)");
}

TEST_CASE("evaluation against the table") {
    const auto a = model_2_1_zero();
    const auto au = a.adjoin_unit();
    // ((x1 x2) x3) at (z, a, b)
    Substitution zab{{Elem::z(1, 1, 1), Elem::a(1), Elem::b()}};
    CHECK(multilinear::evaluate(comb_monomial(3, {1, 2, 3}), zab, a) == Elem::z(1, 1, 2));
    // (x1 (x2 x3)) vanishes without a unit
    const Monomial right_shape{3, 0, {1, 2, 3}};
    CHECK(multilinear::tree_catalog(3)[0].paren_string(std::vector<int>{1, 2, 3}) ==
          "(1,(2,3))");
    CHECK(multilinear::evaluate(right_shape, zab, a).is_zero());
    // with a unit in front it collapses to z a
    Substitution uza{{Elem::unit(), Elem::z(1, 1, 1), Elem::a(1)}};
    CHECK(multilinear::evaluate(right_shape, uza, au) == Elem::z(1, 2, 1));
    CHECK_THROWS_AS(multilinear::evaluate(comb_monomial(3, {1, 2, 3}),
                                          Substitution{{Elem::b()}}, a),
                    Error);
}

TEST_CASE("every non-comb monomial vanishes on non-unital models") {
    const auto a = model_2_1_zero();
    for (int n = 2; n <= 4; ++n) {
        const auto subs = multilinear::relevant_substitutions(n, a);
        for (const auto& m : multilinear::monomial_basis(n, BasisMode::Full)) {
            if (multilinear::tree_catalog(n)[static_cast<std::size_t>(m.tree)].is_left_comb())
                continue;
            for (const auto& sub : subs)
                CHECK(multilinear::evaluate(m, sub, a).is_zero());
        }
    }
}

TEST_CASE("symmetric group action") {
    Rng rng(99);
    // identity
    const auto p = random_poly(4, rng);
    std::vector<int> id{1, 2, 3, 4};
    CHECK(multilinear::act(id, p) == p);
    // transposition on a single monomial: (12) x1x2 = x2x1
    const auto m = comb_monomial(2, {1, 2});
    const auto swapped = multilinear::act({2, 1}, m);
    CHECK(swapped.vars == std::vector<int>{2, 1});
    // degree mismatch is rejected
    CHECK_THROWS_AS(multilinear::act({2, 1}, p), Error);
    // composition law act(sigma tau, p) = act(sigma, act(tau, p))
    for (int trial = 0; trial < 30; ++trial) {
        const auto q = random_poly(4, rng);
        const auto sigma = random_perm(4, rng);
        const auto tau = random_perm(4, rng);
        std::vector<int> sigma_tau(4);
        for (int i = 0; i < 4; ++i)
            sigma_tau[static_cast<std::size_t>(i)] =
                sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)] - 1)];
        CHECK(multilinear::act(sigma_tau, q) ==
              multilinear::act(sigma, multilinear::act(tau, q)));
    }
}

TEST_CASE("alternation") {
    const auto m = comb_monomial(2, {1, 2});
    const auto alt = multilinear::alternate(Polynomial::monomial(m), {1, 2});
    CHECK(alt.term_count() == 2);
    CHECK(alt.terms().at(comb_monomial(2, {1, 2})) == 1);
    CHECK(alt.terms().at(comb_monomial(2, {2, 1})) == -1);
    // twice over the same 2-set doubles
    const auto twice = multilinear::alternate(alt, {1, 2});
    CHECK(twice == alt.scaled(2));
    // alternation kills repeated images
    const auto a = model_2_1_zero();
    Substitution rep{{Elem::a(1), Elem::a(1)}};
    const auto values = multilinear::evaluate_polynomial(alt, rep, a);
    CHECK(values.empty());
    Substitution rep2{{Elem::z(1, 1, 1), Elem::z(1, 1, 1)}};
    CHECK(multilinear::evaluate_polynomial(alt, rep2, a).empty());
}

TEST_CASE("evaluation is linear in the polynomial") {
    Rng rng(123);
    const auto a = model_2_1_zero();
    const auto subs = multilinear::relevant_substitutions(3, a);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poly(3, rng);
        const auto q = random_poly(3, rng);
        const mpq_class c(1 + static_cast<long>(rng.below(5)),
                          1 + static_cast<long>(rng.below(4)));
        const auto combo = p.scaled(c) + q;
        for (const auto& sub : subs) {
            auto lhs = multilinear::evaluate_polynomial(combo, sub, a);
            auto p_vals = multilinear::evaluate_polynomial(p, sub, a);
            auto q_vals = multilinear::evaluate_polynomial(q, sub, a);
            std::map<Elem, mpq_class> rhs;
            for (const auto& [e, v] : p_vals) rhs[e] += c * v;
            for (const auto& [e, v] : q_vals) rhs[e] += v;
            for (auto it = rhs.begin(); it != rhs.end();)
                it = it->second == 0 ? rhs.erase(it) : std::next(it);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("young symmetrizer at the extreme shapes") {
    const auto m = comb_monomial(3, {1, 2, 3});
    const auto p = Polynomial::monomial(m);
    // single row: full symmetrization, 6 terms with coefficient +1
    const auto row = multilinear::young_symmetrizer(
        repr::Tableau::row_major(repr::Partition({3})), p);
    CHECK(row.term_count() == 6);
    for (const auto& [mono, c] : row.terms()) CHECK(c == 1);
    // single column: full alternation, signs
    const auto col = multilinear::young_symmetrizer(
        repr::Tableau::row_major(repr::Partition({1, 1, 1})), p);
    CHECK(col.term_count() == 6);
    mpq_class sum = 0;
    for (const auto& [mono, c] : col.terms()) sum += c;
    CHECK(sum == 0);
    CHECK(col.terms().at(comb_monomial(3, {2, 1, 3})) == -1);
}

TEST_CASE("young symmetrizer is a quasi-idempotent at (2,1)") {
    const auto tableau = repr::Tableau::row_major(repr::Partition({2, 1}));
    const auto p = Polynomial::monomial(comb_monomial(3, {1, 2, 3}));
    const auto e1 = multilinear::young_symmetrizer(tableau, p);
    CHECK(!e1.empty());
    const auto e2 = multilinear::young_symmetrizer(tableau, e1);
    // e^2 = gamma e with gamma = n!/d_lambda = 6/2 = 3, found by expansion
    CHECK(e2 == e1.scaled(3));
}

TEST_CASE("witness f_1 for (2,1,000...)") {
    const auto params = AlgebraParams::of(2, 1, words::WordSpec::periodic("0"));
    const auto w = multilinear::build_witness(params, 1);
    CHECK(w.degree == 3);
    CHECK(w.f.term_count() == 6);  // one alternation over {z, x, y}
    CHECK(w.alternation_sets.size() == 1);
    CHECK(w.alternation_sets[0] == std::vector<int>{1, 2, 3});
    const auto model = model_2_1_zero();
    const auto image = multilinear::evaluate_polynomial(w.f, w.phi, model);
    REQUIRE(image.size() == 1);
    CHECK(image.begin()->first == Elem::z(1, 1, 2));
    CHECK(image.begin()->second == 1);  // sign +1
}

TEST_CASE("witness f_2 reaches position 3") {
    const auto params = AlgebraParams::of(2, 1, words::WordSpec::periodic("0"));
    const auto w = multilinear::build_witness(params, 2);
    CHECK(w.degree == 5);  // n(2) = (2+2)*1 + 1
    CHECK(w.f.term_count() == 12);
    const auto model = model_2_1_zero();
    const auto image = multilinear::evaluate_polynomial(w.f, w.phi, model);
    REQUIRE(image.size() == 1);
    CHECK(image.begin()->first == Elem::z(1, 1, 3));
    CHECK(image.begin()->second == 1);
}

TEST_CASE("witness degree formula n(t) = (m_1+..+m_t) d + 1") {
    const struct {
        int m, d, t;
        const char* word;
        int expect;
    } cases[] = {
        {2, 1, 1, "0", 3},  {2, 1, 2, "0", 5},  {2, 1, 4, "0", 9},
        {3, 1, 2, "0", 7},  {3, 2, 1, "0", 7},  {2, 1, 2, "01", 6},  // m_1=2, m_2=3
        {2, 1, 3, "0", 7},  {3, 1, 1, "1", 5},  // m_1 = 3+1
    };
    for (const auto& c : cases) {
        const auto w = multilinear::build_witness(
            AlgebraParams::of(c.m, c.d, words::WordSpec::periodic(c.word)), c.t);
        CHECK(w.degree == c.expect);
    }
    // cap enforcement
    CHECK_THROWS_AS(multilinear::build_witness(
                        AlgebraParams::of(2, 1, words::WordSpec::periodic("0")), 5),
                    Error);
}

TEST_CASE("witness in the periodic wrap model lands on the wrapped index") {
    const auto params = AlgebraParams::of(2, 1, words::WordSpec::periodic("0"));
    const auto w = multilinear::build_witness(params, 2);
    const auto wrap = AlgebraModel::periodic_wrap(params);  // T = 1
    const auto image = multilinear::evaluate_polynomial(w.f, w.phi, wrap);
    REQUIRE(image.size() == 1);
    CHECK(image.begin()->first == Elem::z(1, 1, 1));  // 3 wraps to 1
}

TEST_CASE("symmetrized witness is proportional by the product of block sizes") {
    // blocks with equal images leave each term's value unchanged
    const struct {
        int m, d;
        long expect;  // prod of factorials of block sizes
    } cases[] = {{3, 1, 2}, {3, 2, 8}, {4, 2, 72}};  // x-blocks (m-1)!^d times y-block d!
    for (const auto& c : cases) {
        const auto params = AlgebraParams::of(c.m, c.d, words::WordSpec::periodic("0"));
        const auto w = multilinear::build_witness(params, 1);
        const auto model = AlgebraModel::windowed(params, 6);
        const auto base = multilinear::evaluate_polynomial(w.f, w.phi, model);
        REQUIRE(base.size() == 1);
        const auto symmetrized = multilinear::symmetrized_witness(w);
        const auto image = multilinear::evaluate_polynomial(symmetrized, w.phi, model);
        REQUIRE(image.size() == 1);
        CHECK(image.begin()->first == base.begin()->first);
        CHECK(image.begin()->second == base.begin()->second * c.expect);
    }
}

TEST_CASE("relevant substitution counts") {
    const auto a = model_2_1_zero();
    // n=2: |z reps| * position * |{a,b}| = 2 * 2 * 2
    CHECK(multilinear::relevant_substitutions(2, a).size() == 8);
    // n=1: plain basis representatives a, b and the two z starts
    CHECK(multilinear::relevant_substitutions(1, a).size() == 4);
    const auto au = a.adjoin_unit();
    // n=1 unital adds the unit
    CHECK(multilinear::relevant_substitutions(1, au).size() == 5);
    // n=2 unital: 2*2*3 one-z plus all-units plus two single-non-unit rows
    CHECK(multilinear::relevant_substitutions(2, au).size() == 12 + 1 + 2);
    // the unital list includes [z, 1]
    bool found = false;
    for (const auto& sub : multilinear::relevant_substitutions(2, au))
        if (sub.images[0] == Elem::z(1, 1, 1) && sub.images[1] == Elem::unit()) found = true;
    CHECK(found);
}

TEST_CASE("polynomial JSON shape") {
    const auto p = multilinear::alternate(
        Polynomial::monomial(comb_monomial(2, {1, 2})), {1, 2});
    const auto j = multilinear::polynomial_to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("tree").get<std::string>() == "(1,2)");
    CHECK(j[0].at("coeff").get<std::string>() == "1");
    CHECK(j[1].at("tree").get<std::string>() == "(2,1)");
    CHECK(j[1].at("coeff").get<std::string>() == "-1");
}
