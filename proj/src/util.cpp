#include "codimlab/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "codimlab/error.hpp"

namespace codimlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::DirectiveExhausted: return "DirectiveExhausted";
        case ErrorCode::FlavorMismatch: return "FlavorMismatch";
        case ErrorCode::AlreadyUnital: return "AlreadyUnital";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ModeUnsound: return "ModeUnsound";
        case ErrorCode::InvalidMove: return "InvalidMove";
        case ErrorCode::NotRepresentable: return "NotRepresentable";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

int error_exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapExceeded:
        case ErrorCode::DirectiveExhausted:
            return 3;
        case ErrorCode::Internal:
            return 4;
        default:
            return 2;
    }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string rational_to_string(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        fail(ErrorCode::InvalidParams, "not a rational: '" + text + "'");
    v.canonicalize();
    return v;
}

mpq_class rational_from_decimal(const std::string& text) {
    std::string s = text;
    // optional exponent part
    long exp10 = 0;
    if (auto pos = s.find_first_of("eE"); pos != std::string::npos) {
        exp10 = std::strtol(s.c_str() + pos + 1, nullptr, 10);
        s = s.substr(0, pos);
    }
    std::string digits;
    long frac_len = 0;
    bool seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) fail(ErrorCode::InvalidParams, "bad decimal: '" + text + "'");
            seen_dot = true;
        } else {
            digits += c;
            if (seen_dot) ++frac_len;
        }
    }
    if (digits.empty() || digits == "-" || digits == "+")
        fail(ErrorCode::InvalidParams, "bad decimal: '" + text + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
        fail(ErrorCode::InvalidParams, "bad decimal: '" + text + "'");
    mpq_class v(num);
    long shift = exp10 - frac_len;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        v *= mpq_class(pow10);
    else
        v /= mpq_class(pow10);
    v.canonicalize();
    return v;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void parallel_for(std::size_t begin, std::size_t end, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = begin + w; i < end; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

int hardware_threads_default() {
    if (const char* env = std::getenv("CODIMLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

} // namespace codimlab
