#include "locgpd/intmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace locgpd {

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    if (trivial()) return "0";
    bool first = true;
    for (auto d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " + ";
        os << "Z^" << free_rank;
    }
    return os.str();
}

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

void check_overflow(std::int64_t v) {
    if (std::abs(v) > (std::int64_t(1) << 60))
        throw std::overflow_error("smith normal form: entries too large");
}

} // namespace

std::vector<std::int64_t> smith_diagonal(Mat m) {
    std::vector<std::int64_t> diag;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        std::size_t pr = r0, pc = c0;
        std::int64_t best = 0;
        for (std::size_t i = r0; i < rows; ++i)
            for (std::size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                std::int64_t q = m[i][c0] / m[r0][c0];
                for (std::size_t j = c0; j < cols; ++j) {
                    m[i][j] -= q * m[r0][j];
                    check_overflow(m[i][j]);
                }
                if (m[i][c0] != 0) {
                    std::swap(m[r0], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                std::int64_t q = m[r0][j] / m[r0][c0];
                for (std::size_t i = r0; i < rows; ++i) {
                    m[i][j] -= q * m[i][c0];
                    check_overflow(m[i][j]);
                }
                if (m[r0][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: pivot must divide the rest of the block
            for (std::size_t i = r0 + 1; i < rows && clean; ++i)
                for (std::size_t j = c0 + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[r0][c0] != 0) {
                        for (std::size_t jj = c0; jj < cols; ++jj) {
                            m[r0][jj] += m[i][jj];
                            check_overflow(m[r0][jj]);
                        }
                        clean = false;
                    }
        }
        diag.push_back(std::abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    return diag;
}

AbelianInvariants cokernel_invariants(const Mat& m, int cols) {
    AbelianInvariants inv;
    if (cols == 0) return inv;
    Mat mm = m;
    for (auto& row : mm)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("cokernel_invariants: ragged matrix");
    auto diag = smith_diagonal(std::move(mm));
    int rank = 0;
    for (auto d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1) inv.torsion.push_back(d);
        }
    inv.free_rank = cols - rank;
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

} // namespace locgpd
