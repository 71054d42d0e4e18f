#include "codimlab/linalg.hpp"

#include <algorithm>

#include "codimlab/error.hpp"

namespace codimlab::linalg {

SparseMat01 SparseMat01::transposed() const {
    SparseMat01 out;
    out.n_rows = n_cols;
    out.n_cols = n_rows;
    out.rows.assign(n_cols, {});
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::uint32_t c : rows[r]) out.rows[c].push_back(static_cast<std::uint32_t>(r));
    for (auto& row : out.rows) std::sort(row.begin(), row.end());
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::size_t modular_rank(const SparseMat01& mat, std::uint64_t prime) {
    require(prime > 2, ErrorCode::InvalidParams, "modulus must be an odd prime");
    // Eliminate over the smaller dimension.
    const SparseMat01* work = &mat;
    SparseMat01 transposed_storage;
    if (mat.n_rows > mat.n_cols) {
        transposed_storage = mat.transposed();
        work = &transposed_storage;
    }
    const std::size_t width = work->n_cols;

    // pivot column -> reduced row (pivot normalized to 1)
    std::vector<std::vector<std::uint64_t>> pivot_rows;
    std::vector<std::size_t> pivot_cols;

    std::vector<std::uint64_t> dense(width);
    for (const auto& support : work->rows) {
        if (support.empty()) continue;
        std::fill(dense.begin(), dense.end(), 0);
        for (std::uint32_t c : support) dense[c] = 1;
        for (std::size_t pi = 0; pi < pivot_cols.size(); ++pi) {
            const std::uint64_t factor = dense[pivot_cols[pi]];
            if (factor == 0) continue;
            const auto& prow = pivot_rows[pi];
            const std::uint64_t neg = prime - factor;
            for (std::size_t c = 0; c < width; ++c) {
                if (prow[c]) dense[c] = (dense[c] + mulmod(neg, prow[c], prime)) % prime;
            }
        }
        std::size_t lead = width;
        for (std::size_t c = 0; c < width; ++c)
            if (dense[c]) {
                lead = c;
                break;
            }
        if (lead == width) continue;
        const std::uint64_t inv = powmod(dense[lead], prime - 2, prime);
        std::vector<std::uint64_t> row(width);
        for (std::size_t c = 0; c < width; ++c) row[c] = mulmod(dense[c], inv, prime);
        pivot_rows.push_back(std::move(row));
        pivot_cols.push_back(lead);
    }
    return pivot_cols.size();
}

namespace {

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) fail(ErrorCode::Internal, "fraction-free elimination lost exactness");
    return q;
}

} // namespace

std::size_t bareiss_rank(const SparseMat01& mat) {
    // Work on the smaller orientation; fraction-free two-step elimination.
    const SparseMat01* src = &mat;
    SparseMat01 transposed_storage;
    if (mat.n_rows > mat.n_cols) {
        transposed_storage = mat.transposed();
        src = &transposed_storage;
    }
    const std::size_t n_rows = src->n_rows;
    const std::size_t n_cols = src->n_cols;

    std::vector<std::vector<mpz_class>> a(n_rows, std::vector<mpz_class>(n_cols, 0));
    for (std::size_t r = 0; r < n_rows; ++r)
        for (std::uint32_t c : src->rows[r]) a[r][c] = 1;

    mpz_class prev = 1;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
        // smallest nonzero entry in this column keeps growth down
        std::size_t best = n_rows;
        for (std::size_t r = row; r < n_rows; ++r) {
            if (a[r][col] == 0) continue;
            if (best == n_rows || mpz_cmpabs(a[r][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0)
                best = r;
        }
        if (best == n_rows) continue;
        std::swap(a[row], a[best]);
        const mpz_class pivot = a[row][col];
        for (std::size_t r = row + 1; r < n_rows; ++r) {
            if (a[r][col] == 0) {
                // the uniform Bareiss update still rescales such rows
                for (std::size_t c = col + 1; c < n_cols; ++c) {
                    if (a[r][c] == 0) continue;
                    a[r][c] = exact_div(a[r][c] * pivot, prev);
                }
                continue;
            }
            const mpz_class head = a[r][col];
            for (std::size_t c = col + 1; c < n_cols; ++c) {
                a[r][c] = exact_div(a[r][c] * pivot - head * a[row][c], prev);
            }
            a[r][col] = 0;
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<std::uint32_t> RationalRref::free_cols() const {
    std::vector<std::uint32_t> out;
    std::size_t pi = 0;
    for (std::uint32_t c = 0; c < n_cols; ++c) {
        if (pi < pivot_cols.size() && pivot_cols[pi] == c) {
            ++pi;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

RationalRref rational_rref(const SparseMat01& mat) {
    RationalRref out;
    out.n_cols = mat.n_cols;

    std::vector<std::vector<mpq_class>> rows;   // reduced pivot rows
    std::vector<std::uint32_t> pivots;

    std::vector<mpq_class> dense(mat.n_cols, 0);
    for (const auto& support : mat.rows) {
        if (support.empty()) continue;
        std::fill(dense.begin(), dense.end(), 0);
        for (std::uint32_t c : support) dense[c] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            const mpq_class factor = dense[pivots[pi]];
            if (factor == 0) continue;
            const auto& prow = rows[pi];
            for (std::size_t c = 0; c < mat.n_cols; ++c)
                if (prow[c] != 0) dense[c] -= factor * prow[c];
        }
        std::size_t lead = mat.n_cols;
        for (std::size_t c = 0; c < mat.n_cols; ++c)
            if (dense[c] != 0) {
                lead = c;
                break;
            }
        if (lead == mat.n_cols) continue;
        const mpq_class inv = 1 / dense[lead];
        for (auto& v : dense) v *= inv;
        // reduce existing rows by the new one
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            const mpq_class factor = rows[pi][lead];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < mat.n_cols; ++c)
                if (dense[c] != 0) rows[pi][c] -= factor * dense[c];
        }
        // insert keeping pivot columns ascending
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < lead) ++at;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), dense);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at),
                      static_cast<std::uint32_t>(lead));
    }
    out.rows = std::move(rows);
    out.pivot_cols = std::move(pivots);
    return out;
}

} // namespace codimlab::linalg
