#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpset/simplicial_set.hpp"

namespace simpset {

using Integer = boost::multiprecision::cpp_int;

template <class T>
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> entries;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, T(0)) {}
    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    T& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<Integer>;

BigMatrix to_big(const IntMatrix& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

/// Column-sparse integer matrix: columns[j] lists (row, value) with value != 0.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

    IntMatrix dense() const;
};

/// Normalized chains: generators[n] lists the n-generators, boundary[n] is
/// the matrix of C_n -> C_{n-1} (boundary[0] has no rows).
struct IntegerChainComplex {
    std::vector<std::vector<GenId>> generators;
    std::vector<SparseMatrix> boundary;
};

IntegerChainComplex chain_complex(const FiniteSimplicialSet& x);
/// d_{n} o d_{n+1} = 0 for every n, computed exactly.
bool boundary_squared_zero(const IntegerChainComplex& c);

/// left * m * right is diagonal with nonnegative entries d_1 | d_2 | ...;
/// invariants lists the nonzero ones.
struct SmithForm {
    std::vector<Integer> invariants;
    BigMatrix left;
    BigMatrix right;
};

/// Runs in 64-bit arithmetic and repeats in arbitrary precision on overflow.
SmithForm smith_normal_form(const IntMatrix& m);
/// Re-multiplies the witnesses and compares with the claimed diagonal.
bool verify_smith(const IntMatrix& m, const SmithForm& s);

/// Nonzero Smith invariants without witnesses: unit pivots are eliminated
/// sparsely, the rest is reduced densely.
std::vector<Integer> smith_invariants(const SparseMatrix& m);

struct HomologyGroup {
    std::size_t betti = 0;
    /// Invariants greater than one, each dividing the next.
    std::vector<Integer> torsion;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyProfile {
    std::vector<HomologyGroup> groups;  // H_0 .. H_max_dim
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
    /// "H0: Z^1" style lines.
    std::string to_text() const;
    /// "dim betti torsion" lines; torsion comma separated or "-".
    std::string to_rows() const;
};

HomologyProfile homology(const FiniteSimplicialSet& x, int max_dim);
HomologyProfile homology(const IntegerChainComplex& c, int max_dim);
std::int64_t euler_characteristic(const FiniteSimplicialSet& x);

/// Bijection on path components and isomorphisms on H_n for n <= max_dim.
/// Uses the mapping cone: H_n(cone) = 0 for n <= max_dim gives surjectivity
/// up to max_dim and injectivity below it; injectivity at max_dim follows
/// from an abstract isomorphism of the finitely generated groups there.
bool is_homology_equivalence(const SimplicialMap& f, int max_dim);

}  // namespace simpset
