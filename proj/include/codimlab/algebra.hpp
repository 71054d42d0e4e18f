#pragma once

/*
 * The word-defined algebras behind this laboratory, as structure-constant
 * multiplication oracles over the basis {a_1..a_d, b, z^i_{j,k}} (plus an
 * optional adjoined unit):
 *
 *   z^i_{j,k} * a_i = z^i_{j+1,k}   if j <  m_k        (m_k = m + w_k)
 *   z^i_{m_k,k} * b = z^{i+1}_{1,k} if i <  d
 *                   = z^1_{1,k+1}   if i == d
 *
 * and every other product of basis elements is zero. The Windowed flavor
 * truncates positions beyond a fixed depth K (products leaving the window are
 * zero); PeriodicWrap folds position k = T back to k = 1 at the i = d step,
 * which yields a finite-dimensional model for periodic words.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "codimlab/words.hpp"

namespace codimlab::algebra {

struct Elem {
    enum class Tag : std::uint8_t { Zero, A, B, Z, Unit };

    Tag tag = Tag::Zero;
    std::int32_t i = 0, j = 0, k = 0;  // A: i;  Z: (i, j, k)

    static Elem zero() { return {}; }
    static Elem a(int i) { return {Tag::A, i, 0, 0}; }
    static Elem b() { return {Tag::B, 0, 0, 0}; }
    static Elem z(int i, int j, int k) { return {Tag::Z, i, j, k}; }
    static Elem unit() { return {Tag::Unit, 0, 0, 0}; }

    bool is_zero() const { return tag == Tag::Zero; }
    bool is_z() const { return tag == Tag::Z; }
    bool is_unit() const { return tag == Tag::Unit; }

    auto operator<=>(const Elem&) const = default;

    std::string to_string() const;  // "0", "a1", "b", "1", "z(1,2,3)"
};

struct AlgebraParams {
    int m = 2;
    int d = 1;
    words::WordSpec word;

    static AlgebraParams of(int m, int d, words::WordSpec word);  // validates
};

enum class Flavor { Windowed, PeriodicWrap };

class AlgebraModel {
public:
    static AlgebraModel windowed(const AlgebraParams& params, int depth);
    static AlgebraModel periodic_wrap(const AlgebraParams& params);

    AlgebraModel adjoin_unit() const;

    const AlgebraParams& params() const { return params_; }
    Flavor flavor() const { return flavor_; }
    bool unital() const { return unital_; }

    // Windowed: truncation depth K. PeriodicWrap: period T.
    int depth() const { return depth_; }

    // m + w_k; 0 when k is outside a windowed model.
    int m_at(int k) const;

    Elem multiply(const Elem& x, const Elem& y) const;

    // ((start * t_1) * t_2) ... * t_r
    Elem left_normed_eval(Elem start, std::span<const Elem> tail) const;

    // Basis enumeration up to z-position max_k (ignored for PeriodicWrap,
    // which lists all its finitely many elements). Unit first when unital,
    // then a_1..a_d, b, then z elements ordered by (k, i, j).
    std::vector<Elem> basis_elements(int max_k) const;

    // z starts that matter for degree-n evaluations: every z element at each
    // representative position. PeriodicWrap uses all positions 1..T; Windowed
    // takes one representative per distinct length-(n+1) window of the word.
    std::vector<Elem> z_representatives(int degree) const;
    std::vector<std::size_t> representative_positions(int degree) const;

    // Depth sufficient for degree-n evaluations from the representatives.
    static int recommended_depth(const words::WordSpec& word, int degree);

    // x*(y*z) == 0 over all basis triples (capped at sample_cap elements when
    // sample_cap > 0). False for unital models, with witness 1*(z*a) != 0.
    bool verify_left_annihilator_identity(std::size_t sample_cap = 0) const;

    // The z span is an ideal with zero multiplication: z*z == 0 and every
    // basis product lands in the z span or zero.
    bool verify_z_ideal(std::size_t sample_cap = 0) const;

    nlohmann::json descriptor() const;
    static AlgebraModel from_descriptor(const nlohmann::json& j, int windowed_depth_hint = 0);
    std::uint64_t descriptor_hash() const;

private:
    AlgebraModel(AlgebraParams params, Flavor flavor, int depth, bool unital);

    AlgebraParams params_;
    Flavor flavor_;
    int depth_;
    bool unital_;
    std::vector<std::uint8_t> bits_;  // w_1..w_depth (Windowed) or one period (PeriodicWrap)
};

} // namespace codimlab::algebra
