#include "idealarr/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace idealarr::linalg {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact linear algebra");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact linear algebra");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact linear algebra");
    return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

int rank(std::span<const IntVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<IntVector> m(rows.begin(), rows.end());
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rank: ragged matrix");

    // Bareiss: after step k every active entry is a (k+1)-minor, so the
    // division by the previous pivot is exact.
    std::int64_t prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[pivot_row]);
        const std::int64_t p = m[pivot_row][c];
        for (std::size_t r = pivot_row + 1; r < m.size(); ++r) {
            const std::int64_t f = m[r][c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                const __int128 v = static_cast<__int128>(p) * m[r][k] - static_cast<__int128>(f) * m[pivot_row][k];
                const __int128 q = v / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("int64 overflow in rank");
                m[r][k] = static_cast<std::int64_t>(q);
            }
            m[r][c] = 0;
        }
        prev = p;
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

IntVector primitive(IntVector v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) return v;
    std::int64_t sign = 1;
    for (auto x : v) {
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    for (auto& x : v) x = x / g * sign;
    return v;
}

IntVector to_primitive_integer(const RationalVector& v) {
    std::int64_t l = 1;
    for (const auto& x : v) l = std::lcm(l, x.denominator());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(v[i].numerator(), l / v[i].denominator());
    return primitive(std::move(out));
}

RationalVector to_rational(const IntVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

bool intersect_with_hyperplane(std::vector<IntVector>& basis, std::span<const std::int64_t> normal) {
    std::vector<std::int64_t> w(basis.size());
    std::size_t pivot = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        w[i] = dot(basis[i], normal);
        if (w[i] != 0 && pivot == basis.size()) pivot = i;
    }
    if (pivot == basis.size()) return false;

    std::vector<IntVector> next;
    next.reserve(basis.size() - 1);
    const IntVector& bp = basis[pivot];
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == pivot) continue;
        IntVector v(bp.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = checked_sub(checked_mul(w[pivot], basis[i][k]), checked_mul(w[i], bp[k]));
        next.push_back(primitive(std::move(v)));
    }
    basis = std::move(next);
    return true;
}

std::vector<IntVector> kernel_basis(std::span<const IntVector> rows, std::size_t dim) {
    std::vector<IntVector> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    for (const auto& r : rows) intersect_with_hyperplane(basis, r);
    return basis;
}

bool proportional(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) return false;
    // a_i b_j == a_j b_i for all i, j; comparing against one nonzero index suffices.
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) ++k;
    if (k == a.size()) return false;
    if (b[k] == 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (static_cast<__int128>(a[i]) * b[k] != static_cast<__int128>(b[i]) * a[k]) return false;
    return true;
}

}  // namespace idealarr::linalg
