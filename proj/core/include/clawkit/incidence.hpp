#ifndef CLAWKIT_INCIDENCE_HPP
#define CLAWKIT_INCIDENCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clawkit/graph.hpp"

namespace clawkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::int64_t binomial(int n, int k);

/// Vector over Z/2Z, bit-packed.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::int64_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::int64_t size() const { return size_; }
    bool get(std::int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::int64_t i, bool value) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    BitVec& operator^=(const BitVec& other);
    bool zero() const;

    bool operator==(const BitVec&) const = default;

private:
    std::int64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over Z/2Z, rows bit-packed.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::int64_t rows, std::int64_t cols);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    bool get(std::int64_t r, std::int64_t c) const {
        return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::int64_t r, std::int64_t c, bool value);

private:
    friend BinMatrix transpose(const BinMatrix&);
    friend std::vector<BitVec> gf2_kernel(const BinMatrix&);
    friend BitVec multiply(const BinMatrix&, const BitVec&);

    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::int64_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

BinMatrix transpose(const BinMatrix& m);

/// Basis of {x : Mx = 0 over Z/2Z}; empty for injective M.
std::vector<BitVec> gf2_kernel(const BinMatrix& m);

BitVec multiply(const BinMatrix& m, const BitVec& x);

std::int64_t gf2_rank(const BinMatrix& m);

/// Dense matrix of exact rationals.
struct RatMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<Rational> entries;  // row-major

    RatMatrix() = default;
    RatMatrix(std::int64_t r, std::int64_t c) : rows(r), cols(c), entries(r * c, Rational(0)) {}
    Rational& at(std::int64_t r, std::int64_t c) { return entries[r * cols + c]; }
    const Rational& at(std::int64_t r, std::int64_t c) const { return entries[r * cols + c]; }
};

RatMatrix to_rational(const BinMatrix& m);

/// Exact rank over the rationals (fraction-free Bareiss elimination on
/// cleared denominators).
std::int64_t rational_rank(const RatMatrix& m);

/// Bijection between the k-element subsets of {0..v-1} and 0..C(v,k)-1 in
/// colexicographic order; rank of sorted s_0 < ... < s_{k-1} is the sum of
/// C(s_i, i+1). For k = 2 this coincides with pair_rank.
class SubsetIndex {
public:
    SubsetIndex(int v, int k);  // 0 <= k <= v <= 62

    int ground_size() const { return v_; }
    int subset_size() const { return k_; }
    std::int64_t count() const;  // C(v,k)

    std::int64_t rank(std::span<const int> subset) const;
    std::vector<int> unrank(std::int64_t index) const;

private:
    int v_ = 0;
    int k_ = 0;
};

/// Inclusion matrix of t-subsets (rows) versus k-subsets (columns) of a
/// v-element ground set, both in colexicographic order; entry 1 iff the row
/// subset is contained in the column subset. Requires 0 <= t <= k <= v <= 16.
BinMatrix build_w(int t, int k, int v);

/// The edge indicator of u as a vector over the 2-subsets in colex order.
BitVec graph_column_vector(const Graph& u);
Graph graph_from_column_vector(const BitVec& vec, int n);

/// True iff the vertex set splits into two (possibly empty) independent
/// sides with every cross pair an edge; equivalently the complement is a
/// disjoint union of at most two cliques.
bool is_complete_bipartite(const Graph& g);

struct WilsonKernelMember {
    Graph graph;
    bool complete_bipartite = false;
    bool complement_complete_bipartite = false;
};

struct WilsonKernelReport {
    int v = 0;
    int k = 0;
    int dim = 0;
    std::vector<WilsonKernelMember> members;  // all 2^dim kernel vectors, decoded
    bool all_classified = false;
};

/// Enumerates the whole kernel of transpose(build_w(2,k,v)) and classifies
/// each member graph. Requires k = 1 mod 4 and 2 <= k <= v-2 and v <= 8, the
/// range in which the kernel is expected to consist of complete bipartite
/// graphs and their complements.
WilsonKernelReport wilson_kernel_members(int v, int k);

/// h is isomorphic to g or to complement(g). Same-order precondition.
bool iso_up_to_complementation(const Graph& g, const Graph& h);

/// Every k-subset induces subgraphs of g and h that are isomorphic up to
/// complementation. Requires 1 <= k <= n <= 10 and equal orders.
bool is_k_hypomorphic_up_to_comp(const Graph& g, const Graph& h, int k);

/// Dimensions line "rows cols", then one line per row of space-separated
/// entries (0/1, or exact rationals like 3/4).
std::string format_matrix(const BinMatrix& m);
std::string format_matrix(const RatMatrix& m);

}  // namespace clawkit

#endif  // CLAWKIT_INCIDENCE_HPP
