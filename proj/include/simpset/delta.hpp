#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "simpset/errors.hpp"

namespace simpset {

/// An order-preserving map [m] -> [n] between finite ordinals, stored as its
/// dense value sequence. Dimensions in this library stay small (<= ~12).
class MonotoneMap {
public:
    /// Throws InvalidArgument unless values is nonempty, weakly increasing and
    /// bounded by codomain_dim.
    MonotoneMap(int codomain_dim, std::vector<int> values);

    static MonotoneMap identity(int n);
    /// The injection [n-1] -> [n] that skips i.
    static MonotoneMap face(int n, int i);
    /// The surjection [n+1] -> [n] that hits i twice.
    static MonotoneMap degeneracy(int n, int i);
    /// The map [0] -> [n] picking vertex i.
    static MonotoneMap vertex(int n, int i);
    /// The injection [k] -> [n] whose image is the given strictly increasing list.
    static MonotoneMap injection(int n, std::span<const int> image);

    int domain_dim() const { return static_cast<int>(values_.size()) - 1; }
    int codomain_dim() const { return codomain_; }
    std::span<const int> values() const { return values_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    /// For a surjection s, the positions i with s(i) == s(i+1), listed in
    /// descending order. Applying the elementary degeneracies s_i in that
    /// order (left to right) reproduces s: s = degeneracy(., j_k) o ... o
    /// degeneracy(., j_1) with j_1 > ... > j_k.
    std::vector<int> elementary_degeneracies() const;

    /// Elements of the codomain not in the image, ascending.
    std::vector<int> missing_values() const;

    std::string to_string() const;

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
    friend std::strong_ordering operator<=>(const MonotoneMap& a, const MonotoneMap& b)
    {
        if (auto c = a.codomain_ <=> b.codomain_; c != 0)
            return c;
        return a.values_ <=> b.values_;
    }

private:
    int codomain_ = 0;
    std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f);

/// f o g, i.e. (f o g)(i) = f(g(i)). Requires codomain(g) == domain(f).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

struct EzFactors {
    MonotoneMap surjection;
    MonotoneMap injection;
};

/// The unique factorization f = injection o surjection.
EzFactors ez_factorize(const MonotoneMap& f);

}  // namespace simpset
