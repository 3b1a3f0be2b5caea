#include "clawkit/incidence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "clawkit/isomorphism.hpp"

namespace clawkit {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 out = 1;  // intermediates exceed 64 bits near C(62,31)
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return static_cast<std::int64_t>(out);
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (size_ != other.size_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool BitVec::zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

BinMatrix::BinMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    words_.assign(rows_ * words_per_row_, 0);
}

void BinMatrix::set(std::int64_t r, std::int64_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (value)
        words_[r * words_per_row_ + (c >> 6)] |= bit;
    else
        words_[r * words_per_row_ + (c >> 6)] &= ~bit;
}

BinMatrix transpose(const BinMatrix& m) {
    BinMatrix out(m.cols_, m.rows_);
    for (std::int64_t r = 0; r < m.rows_; ++r)
        for (std::int64_t w = 0; w < m.words_per_row_; ++w) {
            std::uint64_t word = m.words_[r * m.words_per_row_ + w];
            while (word) {
                const int bit = std::countr_zero(word);
                out.set((w << 6) | bit, r, true);
                word &= word - 1;
            }
        }
    return out;
}

BitVec multiply(const BinMatrix& m, const BitVec& x) {
    if (x.size() != m.cols_) throw std::invalid_argument("multiply: dimension mismatch");
    BitVec out(m.rows_);
    for (std::int64_t r = 0; r < m.rows_; ++r) {
        int parity = 0;
        for (std::int64_t w = 0; w < m.words_per_row_; ++w) {
            std::uint64_t word = m.words_[r * m.words_per_row_ + w];
            while (word) {
                parity ^= x.get((w << 6) | std::countr_zero(word));
                word &= word - 1;
            }
        }
        out.set(r, parity);
    }
    return out;
}

namespace {

// Row-reduce a copy of m over Z/2Z; returns the reduced rows and, for each
// column, the index of the row pivoting on it (-1 for free columns).
struct Gf2Echelon {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::int64_t> pivot_row_of_col;
    std::int64_t rank = 0;
};

Gf2Echelon gf2_echelon(const BinMatrix& m) {
    const std::int64_t words = (m.cols() + 63) / 64;
    Gf2Echelon e;
    e.rows.reserve(m.rows());
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        std::vector<std::uint64_t> row(words, 0);
        for (std::int64_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) row[c >> 6] |= std::uint64_t{1} << (c & 63);
        e.rows.push_back(std::move(row));
    }
    e.pivot_row_of_col.assign(m.cols(), -1);
    std::int64_t next = 0;
    for (std::int64_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        const std::int64_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::int64_t pivot = -1;
        for (std::int64_t r = next; r < m.rows(); ++r)
            if (e.rows[r][w] & bit) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(e.rows[next], e.rows[pivot]);
        for (std::int64_t r = 0; r < m.rows(); ++r)
            if (r != next && (e.rows[r][w] & bit))
                for (std::int64_t i = 0; i < words; ++i) e.rows[r][i] ^= e.rows[next][i];
        e.pivot_row_of_col[c] = next;
        ++next;
    }
    e.rank = next;
    return e;
}

}  // namespace

std::int64_t gf2_rank(const BinMatrix& m) {
    return gf2_echelon(m).rank;
}

std::vector<BitVec> gf2_kernel(const BinMatrix& m) {
    const Gf2Echelon e = gf2_echelon(m);
    std::vector<BitVec> basis;
    for (std::int64_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (e.pivot_row_of_col[free_col] != -1) continue;
        BitVec x(m.cols());
        x.set(free_col, true);
        for (std::int64_t c = 0; c < m.cols(); ++c) {
            const std::int64_t r = e.pivot_row_of_col[c];
            if (r != -1 && ((e.rows[r][free_col >> 6] >> (free_col & 63)) & 1u))
                x.set(c, true);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

RatMatrix to_rational(const BinMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::int64_t r = 0; r < m.rows(); ++r)
        for (std::int64_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) out.at(r, c) = 1;
    return out;
}

std::int64_t rational_rank(const RatMatrix& m) {
    // Clear denominators row by row (rank-preserving), then run fraction-free
    // Bareiss elimination in exact integers.
    std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
    for (std::int64_t r = 0; r < m.rows; ++r) {
        BigInt lcm = 1;
        for (std::int64_t c = 0; c < m.cols; ++c) {
            const BigInt den = boost::multiprecision::denominator(m.at(r, c));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        for (std::int64_t c = 0; c < m.cols; ++c) {
            const Rational scaled = m.at(r, c) * Rational(lcm);
            a[r][c] = boost::multiprecision::numerator(scaled);
        }
    }
    std::int64_t rank = 0;
    BigInt prev = 1;
    for (std::int64_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(a[rank], a[pivot]);
        for (std::int64_t r = rank + 1; r < m.rows; ++r) {
            for (std::int64_t c = col + 1; c < m.cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

SubsetIndex::SubsetIndex(int v, int k) : v_(v), k_(k) {
    if (k < 0 || v < k || v > 62) throw std::invalid_argument("SubsetIndex: need 0 <= k <= v <= 62");
}

std::int64_t SubsetIndex::count() const {
    return binomial(v_, k_);
}

std::int64_t SubsetIndex::rank(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw std::invalid_argument("SubsetIndex::rank: wrong subset size");
    std::int64_t out = 0;
    int prev = -1;
    for (int i = 0; i < k_; ++i) {
        const int s = subset[i];
        if (s <= prev || s >= v_) throw std::invalid_argument("SubsetIndex::rank: not ascending in range");
        out += binomial(s, i + 1);
        prev = s;
    }
    return out;
}

std::vector<int> SubsetIndex::unrank(std::int64_t index) const {
    if (index < 0 || index >= count()) throw std::invalid_argument("SubsetIndex::unrank: out of range");
    std::vector<int> out(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        // Largest s with C(s, i+1) <= index; search downward from v-1.
        int s = v_ - 1;
        while (binomial(s, i + 1) > index) --s;
        out[i] = s;
        index -= binomial(s, i + 1);
    }
    return out;
}

BinMatrix build_w(int t, int k, int v) {
    if (t < 0 || t > k || k > v || v > 16)
        throw std::invalid_argument("build_w: need 0 <= t <= k <= v <= 16");
    const SubsetIndex rows(v, t), cols(v, k);
    BinMatrix w(rows.count(), cols.count());
    std::vector<int> tsub(t);
    for (std::int64_t c = 0; c < cols.count(); ++c) {
        const std::vector<int> ksub = cols.unrank(c);
        // All t-subsets of ksub via positions.
        std::vector<int> pos(t);
        std::iota(pos.begin(), pos.end(), 0);
        for (;;) {
            for (int i = 0; i < t; ++i) tsub[i] = ksub[pos[i]];
            w.set(rows.rank(tsub), c, true);
            int i = t - 1;
            while (i >= 0 && pos[i] == k - t + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < t; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    return w;
}

BitVec graph_column_vector(const Graph& u) {
    const int n = u.order();
    BitVec out(binomial(n, 2));
    for (int hi = 0; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (u.has_edge(lo, hi)) out.set(pair_rank(lo, hi), true);
    return out;
}

Graph graph_from_column_vector(const BitVec& vec, int n) {
    if (vec.size() != binomial(n, 2))
        throw std::invalid_argument("graph_from_column_vector: size is not C(n,2)");
    Graph g(n);
    for (std::int64_t i = 0; i < vec.size(); ++i)
        if (vec.get(i)) {
            const VertexPair p = pair_unrank(i);
            g.add_edge(p.lo, p.hi);
        }
    return g;
}

bool is_complete_bipartite(const Graph& g) {
    const Graph co = complement(g);
    const ComponentPartition parts = connected_components(co);
    if (parts.parts.size() > 2) return false;
    for (const auto& part : parts.parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!co.has_edge(part[i], part[j])) return false;
    return true;
}

WilsonKernelReport wilson_kernel_members(int v, int k) {
    if (k % 4 != 1 || k < 2 || k > v - 2 || v > 8)
        throw std::invalid_argument("wilson_kernel_members: need k = 1 mod 4, 2 <= k <= v-2, v <= 8");
    WilsonKernelReport report;
    report.v = v;
    report.k = k;
    const std::vector<BitVec> basis = gf2_kernel(transpose(build_w(2, k, v)));
    report.dim = static_cast<int>(basis.size());
    report.all_classified = true;
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << report.dim); ++combo) {
        BitVec x(binomial(v, 2));
        for (int b = 0; b < report.dim; ++b)
            if ((combo >> b) & 1u) x ^= basis[b];
        WilsonKernelMember member;
        member.graph = graph_from_column_vector(x, v);
        member.complete_bipartite = is_complete_bipartite(member.graph);
        member.complement_complete_bipartite = is_complete_bipartite(complement(member.graph));
        if (!member.complete_bipartite && !member.complement_complete_bipartite)
            report.all_classified = false;
        report.members.push_back(std::move(member));
    }
    return report;
}

bool iso_up_to_complementation(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw std::invalid_argument("iso_up_to_complementation: orders differ");
    return are_isomorphic(g, h) || are_isomorphic(complement(g), h);
}

bool is_k_hypomorphic_up_to_comp(const Graph& g, const Graph& h, int k) {
    const int n = g.order();
    if (h.order() != n) throw std::invalid_argument("is_k_hypomorphic_up_to_comp: orders differ");
    if (k < 1 || k > n || n > 10)
        throw std::invalid_argument("is_k_hypomorphic_up_to_comp: need 1 <= k <= n <= 10");
    const SubsetIndex idx(n, k);
    for (std::int64_t i = 0; i < idx.count(); ++i) {
        const std::vector<int> subset = idx.unrank(i);
        if (!iso_up_to_complementation(induced(g, subset).graph, induced(h, subset).graph))
            return false;
    }
    return true;
}

std::string format_matrix(const BinMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        for (std::int64_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << (m.get(r, c) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

std::string format_matrix(const RatMatrix& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << '\n';
    for (std::int64_t r = 0; r < m.rows; ++r) {
        for (std::int64_t c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace clawkit
