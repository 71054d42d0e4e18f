#include "codimlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace codimlab::algebra {

std::string Elem::to_string() const {
    switch (tag) {
        case Tag::Zero: return "0";
        case Tag::A: return "a" + std::to_string(i);
        case Tag::B: return "b";
        case Tag::Unit: return "1";
        case Tag::Z: {
            std::ostringstream os;
            os << "z(" << i << "," << j << "," << k << ")";
            return os.str();
        }
    }
    return "?";
}

AlgebraParams AlgebraParams::of(int m, int d, words::WordSpec word) {
    require(m >= 2, ErrorCode::InvalidParams, "m must be >= 2");
    require(d >= 1 && d <= m - 1, ErrorCode::InvalidParams, "d must satisfy 1 <= d <= m-1");
    return AlgebraParams{m, d, std::move(word)};
}

AlgebraModel::AlgebraModel(AlgebraParams params, Flavor flavor, int depth, bool unital)
    : params_(std::move(params)), flavor_(flavor), depth_(depth), unital_(unital) {
    bits_ = words::prefix(params_.word, static_cast<std::size_t>(depth_));
}

AlgebraModel AlgebraModel::windowed(const AlgebraParams& params, int depth) {
    require(depth >= 1, ErrorCode::InvalidParams, "windowed depth must be >= 1");
    return AlgebraModel(params, Flavor::Windowed, depth, false);
}

AlgebraModel AlgebraModel::periodic_wrap(const AlgebraParams& params) {
    require(params.word.is_periodic_kind(), ErrorCode::FlavorMismatch,
            "periodic-wrap models need a periodic word");
    const int period = static_cast<int>(params.word.period());
    return AlgebraModel(params, Flavor::PeriodicWrap, period, false);
}

AlgebraModel AlgebraModel::adjoin_unit() const {
    require(!unital_, ErrorCode::AlreadyUnital, "model already has a unit");
    AlgebraModel copy = *this;
    copy.unital_ = true;
    return copy;
}

int AlgebraModel::m_at(int k) const {
    if (k < 1) return 0;
    if (flavor_ == Flavor::PeriodicWrap)
        return params_.m + bits_[static_cast<std::size_t>((k - 1) % depth_)];
    if (k > depth_) return 0;
    return params_.m + bits_[static_cast<std::size_t>(k - 1)];
}

Elem AlgebraModel::multiply(const Elem& x, const Elem& y) const {
    if (x.is_zero() || y.is_zero()) return Elem::zero();
    if (unital_) {
        if (x.is_unit()) return y;
        if (y.is_unit()) return x;
    } else if (x.is_unit() || y.is_unit()) {
        return Elem::zero();
    }
    if (!x.is_z()) return Elem::zero();

    const int mk = m_at(x.k);
    if (mk == 0) return Elem::zero();  // outside the window

    if (y.tag == Elem::Tag::A && y.i == x.i)
        return x.j < mk ? Elem::z(x.i, x.j + 1, x.k) : Elem::zero();

    if (y.tag == Elem::Tag::B && x.j == mk) {
        if (x.i < params_.d) return Elem::z(x.i + 1, 1, x.k);
        if (flavor_ == Flavor::PeriodicWrap)
            return Elem::z(1, 1, x.k == depth_ ? 1 : x.k + 1);
        return x.k + 1 <= depth_ ? Elem::z(1, 1, x.k + 1) : Elem::zero();
    }
    return Elem::zero();
}

Elem AlgebraModel::left_normed_eval(Elem start, std::span<const Elem> tail) const {
    Elem acc = start;
    for (const Elem& t : tail) {
        if (acc.is_zero()) return acc;
        acc = multiply(acc, t);
    }
    return acc;
}

std::vector<Elem> AlgebraModel::basis_elements(int max_k) const {
    std::vector<Elem> out;
    if (unital_) out.push_back(Elem::unit());
    for (int i = 1; i <= params_.d; ++i) out.push_back(Elem::a(i));
    out.push_back(Elem::b());
    const int last = (flavor_ == Flavor::PeriodicWrap) ? depth_ : std::min(depth_, max_k);
    for (int k = 1; k <= last; ++k)
        for (int i = 1; i <= params_.d; ++i)
            for (int j = 1; j <= m_at(k); ++j) out.push_back(Elem::z(i, j, k));
    return out;
}

std::vector<std::size_t> AlgebraModel::representative_positions(int degree) const {
    require(degree >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    if (flavor_ == Flavor::PeriodicWrap) {
        std::vector<std::size_t> all(static_cast<std::size_t>(depth_));
        for (int k = 0; k < depth_; ++k) all[static_cast<std::size_t>(k)] = k + 1;
        return all;
    }
    // One start per distinct window of length degree+1; a degree-n evaluation
    // starting at k consults w_k .. w_{k+n-1} only.
    auto positions = words::factor_first_positions(params_.word,
                                                   static_cast<std::size_t>(degree) + 1);
    for (std::size_t pos : positions) {
        require(pos + static_cast<std::size_t>(degree) <= static_cast<std::size_t>(depth_),
                ErrorCode::CapExceeded,
                "windowed depth " + std::to_string(depth_) +
                    " too small for degree " + std::to_string(degree) +
                    " (need at least " + std::to_string(recommended_depth(params_.word, degree)) +
                    ")");
    }
    return positions;
}

std::vector<Elem> AlgebraModel::z_representatives(int degree) const {
    std::vector<Elem> out;
    for (std::size_t pos : representative_positions(degree)) {
        const int k = static_cast<int>(pos);
        for (int i = 1; i <= params_.d; ++i)
            for (int j = 1; j <= m_at(k); ++j) out.push_back(Elem::z(i, j, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int AlgebraModel::recommended_depth(const words::WordSpec& word, int degree) {
    require(degree >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    const auto positions =
        words::factor_first_positions(word, static_cast<std::size_t>(degree) + 1);
    std::size_t deepest = 1;
    for (std::size_t pos : positions) deepest = std::max(deepest, pos);
    return static_cast<int>(deepest) + degree;
}

bool AlgebraModel::verify_left_annihilator_identity(std::size_t sample_cap) const {
    auto basis = basis_elements(depth_);
    if (sample_cap > 0 && basis.size() > sample_cap) basis.resize(sample_cap);
    for (const Elem& x : basis)
        for (const Elem& y : basis)
            for (const Elem& z : basis) {
                const Elem inner = multiply(y, z);
                if (inner.is_zero()) continue;
                if (!multiply(x, inner).is_zero()) return false;
            }
    return true;
}

bool AlgebraModel::verify_z_ideal(std::size_t sample_cap) const {
    auto basis = basis_elements(depth_);
    if (sample_cap > 0 && basis.size() > sample_cap) basis.resize(sample_cap);
    for (const Elem& x : basis)
        for (const Elem& y : basis) {
            if (x.is_z() && y.is_z() && !multiply(x, y).is_zero()) return false;
            if (x.is_z() || y.is_z()) {
                const Elem prod = multiply(x, y);
                // products touching the z span stay inside it
                if (!prod.is_zero() && !prod.is_z() &&
                    !(prod == x && y.is_unit()) && !(prod == y && x.is_unit()))
                    return false;
            }
        }
    return true;
}

nlohmann::json AlgebraModel::descriptor() const {
    nlohmann::json j;
    j["m"] = params_.m;
    j["d"] = params_.d;
    j["word"] = words::to_json(params_.word);
    j["flavor"] = flavor_ == Flavor::PeriodicWrap ? "periodic-wrap" : "windowed";
    if (flavor_ == Flavor::Windowed) j["depth"] = depth_;
    j["unital"] = unital_;
    return j;
}

AlgebraModel AlgebraModel::from_descriptor(const nlohmann::json& j, int windowed_depth_hint) {
    const auto word = words::from_json(j.at("word"));
    const auto params = AlgebraParams::of(j.at("m").get<int>(), j.at("d").get<int>(), word);
    const std::string flavor = j.at("flavor").get<std::string>();
    AlgebraModel model = [&]() {
        if (flavor == "periodic-wrap") return periodic_wrap(params);
        if (flavor == "windowed") {
            int depth = windowed_depth_hint;
            if (j.contains("depth")) depth = j.at("depth").get<int>();
            require(depth >= 1, ErrorCode::InvalidParams, "windowed descriptor needs a depth");
            return windowed(params, depth);
        }
        fail(ErrorCode::InvalidSpec, "unknown flavor '" + flavor + "'");
    }();
    if (j.value("unital", false)) model = model.adjoin_unit();
    return model;
}

std::uint64_t AlgebraModel::descriptor_hash() const {
    return fnv1a64(descriptor().dump());
}

} // namespace codimlab::algebra
