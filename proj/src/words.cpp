#include "codimlab/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace codimlab::words {

namespace {

// Memory guard for directive-generated prefixes.
constexpr std::size_t kMaxGeneratedLength = std::size_t{1} << 24;

std::vector<std::uint8_t> bits_of_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else fail(ErrorCode::InvalidSpec, std::string("pattern symbol not in {0,1}: '") + c + "'");
    }
    return bits;
}

// Standard words s_0 = 0, s_1 = 0^{d_1} 1, s_k = s_{k-1}^{d_k} s_{k-2},
// grown until the length reaches `want` or the directive runs out.
std::vector<std::uint8_t> standard_word(const std::vector<long long>& directive,
                                        std::size_t want) {
    std::vector<std::uint8_t> prev = {0};  // s_0
    std::vector<std::uint8_t> cur;         // s_1
    cur.assign(static_cast<std::size_t>(directive.at(0)), 0);
    cur.push_back(1);
    for (std::size_t idx = 1; idx < directive.size() && cur.size() < want; ++idx) {
        std::vector<std::uint8_t> next;
        const std::size_t reps = static_cast<std::size_t>(directive[idx]);
        if (cur.size() * reps + prev.size() > kMaxGeneratedLength)
            fail(ErrorCode::CapExceeded, "directive prefix exceeds the generation cap");
        next.reserve(cur.size() * reps + prev.size());
        for (std::size_t r = 0; r < reps; ++r)
            next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::set<std::vector<std::uint8_t>> factors_of_prefix(const std::vector<std::uint8_t>& w,
                                                      std::size_t n) {
    std::set<std::vector<std::uint8_t>> out;
    if (w.size() < n) return out;
    for (std::size_t s = 0; s + n <= w.size(); ++s)
        out.insert(std::vector<std::uint8_t>(w.begin() + s, w.begin() + s + n));
    return out;
}

// Scans prefixes of length H, 2H, 4H (doubling H when not yet stable) until
// the factor count is unchanged across two consecutive doublings.
std::vector<std::uint8_t> saturated_prefix(const WordSpec& spec, std::size_t n) {
    std::size_t h = (n + 1) * (n + 1) + n;
    for (;;) {
        const auto w1 = prefix(spec, h);
        const auto w2 = prefix(spec, 2 * h);
        const auto w4 = prefix(spec, 4 * h);
        const std::size_t c1 = factors_of_prefix(w1, n).size();
        const std::size_t c2 = factors_of_prefix(w2, n).size();
        const std::size_t c4 = factors_of_prefix(w4, n).size();
        if (c1 == c2 && c2 == c4) return w4;
        h *= 2;
    }
}

} // namespace

WordSpec WordSpec::periodic(std::string_view bits) { return periodic(bits_of_string(bits)); }

WordSpec WordSpec::periodic(std::vector<std::uint8_t> bits) {
    require(!bits.empty(), ErrorCode::InvalidSpec, "periodic pattern must be nonempty");
    for (auto b : bits)
        require(b == 0 || b == 1, ErrorCode::InvalidSpec, "pattern symbol not in {0,1}");
    WordSpec spec;
    spec.kind = WordKind::Periodic;
    spec.pattern = std::move(bits);
    return spec;
}

WordSpec WordSpec::mechanical(long long p, long long q) {
    require(q >= 1, ErrorCode::InvalidSpec, "mechanical word needs q >= 1");
    require(p >= 0 && p <= q, ErrorCode::InvalidSpec, "mechanical word needs 0 <= p <= q");
    require(std::gcd(p, q) == 1, ErrorCode::InvalidSpec, "mechanical fraction must be reduced");
    WordSpec spec;
    spec.kind = WordKind::SturmianRational;
    spec.p = p;
    spec.q = q;
    return spec;
}

WordSpec WordSpec::sturmian(std::vector<long long> directive) {
    require(!directive.empty(), ErrorCode::InvalidSpec, "directive must be nonempty");
    for (long long d : directive)
        require(d >= 1, ErrorCode::InvalidSpec, "directive entries must be positive");
    WordSpec spec;
    spec.kind = WordKind::SturmianDirective;
    spec.directive = std::move(directive);
    return spec;
}

std::size_t WordSpec::period() const {
    switch (kind) {
        case WordKind::Periodic: return pattern.size();
        case WordKind::SturmianRational: return static_cast<std::size_t>(q);
        case WordKind::SturmianDirective:
            fail(ErrorCode::FlavorMismatch, "directive words are not periodic");
    }
    return 0;
}

std::string WordSpec::to_string() const {
    switch (kind) {
        case WordKind::Periodic: {
            std::string s = "periodic:";
            for (auto b : pattern) s += static_cast<char>('0' + b);
            return s;
        }
        case WordKind::SturmianRational:
            return "mechanical:" + std::to_string(p) + "/" + std::to_string(q);
        case WordKind::SturmianDirective: {
            std::string s = "sturmian:";
            for (std::size_t i = 0; i < directive.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(directive[i]);
            }
            return s;
        }
    }
    return "";
}

WordSpec WordSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    require(colon != std::string_view::npos, ErrorCode::InvalidSpec,
            "word shorthand must look like periodic:0110, mechanical:2/5 or sturmian:1,1,1");
    const std::string_view kind = text.substr(0, colon);
    const std::string body(text.substr(colon + 1));
    if (kind == "periodic") return periodic(body);
    if (kind == "mechanical") {
        auto slash = body.find('/');
        require(slash != std::string::npos, ErrorCode::InvalidSpec, "mechanical wants p/q");
        return mechanical(std::stoll(body.substr(0, slash)), std::stoll(body.substr(slash + 1)));
    }
    if (kind == "sturmian") {
        std::vector<long long> dir;
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            dir.push_back(std::stoll(body.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return sturmian(std::move(dir));
    }
    fail(ErrorCode::InvalidSpec, "unknown word kind '" + std::string(kind) + "'");
}

std::vector<std::uint8_t> prefix(const WordSpec& spec, std::size_t length) {
    require(length >= 1, ErrorCode::InvalidSpec, "prefix length must be >= 1");
    std::vector<std::uint8_t> out;
    out.reserve(length);
    switch (spec.kind) {
        case WordKind::Periodic: {
            for (std::size_t i = 0; i < length; ++i)
                out.push_back(spec.pattern[i % spec.pattern.size()]);
            return out;
        }
        case WordKind::SturmianRational: {
            // w_i = floor((i+1) p / q) - floor(i p / q), i = 1..length
            for (std::size_t i = 1; i <= length; ++i) {
                const long long a = static_cast<long long>(i + 1) * spec.p / spec.q;
                const long long b = static_cast<long long>(i) * spec.p / spec.q;
                out.push_back(static_cast<std::uint8_t>(a - b));
            }
            return out;
        }
        case WordKind::SturmianDirective: {
            auto w = standard_word(spec.directive, length);
            if (w.size() < length)
                fail(ErrorCode::DirectiveExhausted,
                     "directive determines only " + std::to_string(w.size()) +
                         " symbols, need " + std::to_string(length));
            w.resize(length);
            return w;
        }
    }
    fail(ErrorCode::Internal, "unreachable word kind");
}

std::size_t representable_horizon(const WordSpec& spec) {
    if (spec.kind != WordKind::SturmianDirective) return SIZE_MAX;
    return standard_word(spec.directive, kMaxGeneratedLength).size();
}

std::size_t height(const std::vector<std::uint8_t>& bits) {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

std::vector<std::vector<std::uint8_t>> distinct_factors(const WordSpec& spec, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidSpec, "factor length must be >= 1");
    const auto w = saturated_prefix(spec, n);
    auto set = factors_of_prefix(w, n);
    return std::vector<std::vector<std::uint8_t>>(set.begin(), set.end());
}

std::vector<std::size_t> factor_first_positions(const WordSpec& spec, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidSpec, "factor length must be >= 1");
    const auto w = saturated_prefix(spec, n);
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<std::size_t> positions;
    for (std::size_t s = 0; s + n <= w.size(); ++s) {
        std::vector<std::uint8_t> f(w.begin() + s, w.begin() + s + n);
        if (seen.insert(std::move(f)).second) positions.push_back(s + 1);
    }
    return positions;
}

std::size_t complexity(const WordSpec& spec, std::size_t n) {
    return distinct_factors(spec, n).size();
}

Slope slope(const WordSpec& spec) {
    switch (spec.kind) {
        case WordKind::Periodic: {
            const auto& pat = spec.pattern;
            mpq_class v(static_cast<long>(height(pat)), static_cast<long>(pat.size()));
            v.canonicalize();
            return {v, v};
        }
        case WordKind::SturmianRational: {
            mpq_class v(static_cast<long>(spec.p), static_cast<long>(spec.q));
            v.canonicalize();
            return {v, v};
        }
        case WordKind::SturmianDirective: {
            // Continued fraction of the slope is [0; d_1 + 1, d_2, d_3, ...];
            // consecutive convergents bracket it.
            mpz_class p_prev = 1, q_prev = 0;  // h_{-1}/k_{-1}
            mpz_class p_cur = 0, q_cur = 1;    // h_0/k_0 for a_0 = 0
            std::vector<mpq_class> conv;
            for (std::size_t idx = 0; idx < spec.directive.size(); ++idx) {
                const long a = static_cast<long>((idx == 0) ? spec.directive[0] + 1
                                                            : spec.directive[idx]);
                mpz_class p_next = a * p_cur + p_prev;
                mpz_class q_next = a * q_cur + q_prev;
                p_prev = p_cur; q_prev = q_cur;
                p_cur = p_next; q_cur = q_next;
                conv.emplace_back(p_cur, q_cur);
                conv.back().canonicalize();
            }
            if (conv.size() == 1) {
                // single quotient: alpha lies strictly between 1/(a_1+1) and 1/a_1
                mpq_class hi = conv[0];
                mpq_class lo = mpq_class(p_cur, q_cur + 1);
                lo.canonicalize();
                return {lo, hi};
            }
            mpq_class a = conv[conv.size() - 2];
            mpq_class b = conv[conv.size() - 1];
            return a < b ? Slope{a, b} : Slope{b, a};
        }
    }
    fail(ErrorCode::Internal, "unreachable word kind");
}

std::size_t balance_constant(const WordSpec& spec, std::size_t n_max) {
    require(n_max >= 1, ErrorCode::InvalidSpec, "n_max must be >= 1");
    std::size_t best = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto factors = distinct_factors(spec, n);
        std::size_t hmin = SIZE_MAX, hmax = 0;
        for (const auto& f : factors) {
            const std::size_t h = height(f);
            hmin = std::min(hmin, h);
            hmax = std::max(hmax, h);
        }
        if (!factors.empty()) best = std::max(best, hmax - hmin);
    }
    return best;
}

mpq_class factor_height_deviation(const WordSpec& spec, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidSpec, "n must be >= 1");
    const Slope s = slope(spec);
    const auto factors = distinct_factors(spec, n);
    mpq_class worst = 0;
    for (const auto& f : factors) {
        mpq_class ratio(static_cast<long>(height(f)), static_cast<long>(n));
        ratio.canonicalize();
        mpq_class d1 = abs(ratio - s.lo);
        mpq_class d2 = abs(ratio - s.hi);
        worst = std::max(worst, std::max(d1, d2));
    }
    return worst;
}

nlohmann::json to_json(const WordSpec& spec) {
    switch (spec.kind) {
        case WordKind::Periodic: {
            std::string s;
            for (auto b : spec.pattern) s += static_cast<char>('0' + b);
            return {{"kind", "periodic"}, {"pattern", s}};
        }
        case WordKind::SturmianRational:
            return {{"kind", "mechanical"}, {"p", spec.p}, {"q", spec.q}};
        case WordKind::SturmianDirective:
            return {{"kind", "sturmian"}, {"directive", spec.directive}};
    }
    fail(ErrorCode::Internal, "unreachable word kind");
}

WordSpec from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "periodic") return WordSpec::periodic(j.at("pattern").get<std::string>());
    if (kind == "mechanical")
        return WordSpec::mechanical(j.at("p").get<long long>(), j.at("q").get<long long>());
    if (kind == "sturmian")
        return WordSpec::sturmian(j.at("directive").get<std::vector<long long>>());
    fail(ErrorCode::InvalidSpec, "unknown word kind '" + kind + "'");
}

} // namespace codimlab::words
