#include "simpset/delta.hpp"

#include <ostream>
#include <sstream>

namespace simpset {

MonotoneMap::MonotoneMap(int codomain_dim, std::vector<int> values)
    : codomain_(codomain_dim), values_(std::move(values))
{
    if (codomain_ < 0)
        throw InvalidArgument("monotone map: negative codomain");
    if (values_.empty())
        throw InvalidArgument("monotone map: empty domain");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0 || values_[i] > codomain_)
            throw InvalidArgument("monotone map: value out of range in " + to_string());
        if (i > 0 && values_[i] < values_[i - 1])
            throw InvalidArgument("monotone map: not monotone " + to_string());
    }
}

MonotoneMap MonotoneMap::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::face(int n, int i)
{
    if (n < 1 || i < 0 || i > n)
        throw InvalidArgument("face(" + std::to_string(n) + "," + std::to_string(i) + "): index out of range");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j <= n; ++j)
        if (j != i)
            v.push_back(j);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::degeneracy(int n, int i)
{
    if (n < 0 || i < 0 || i > n)
        throw InvalidArgument("degeneracy(" + std::to_string(n) + "," + std::to_string(i) + "): index out of range");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n + 2));
    for (int j = 0; j <= n; ++j) {
        v.push_back(j);
        if (j == i)
            v.push_back(j);
    }
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::vertex(int n, int i)
{
    if (i < 0 || i > n)
        throw InvalidArgument("vertex index out of range");
    return MonotoneMap(n, {i});
}

MonotoneMap MonotoneMap::injection(int n, std::span<const int> image)
{
    std::vector<int> v(image.begin(), image.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            throw InvalidArgument("injection: image not strictly increasing");
    return MonotoneMap(n, std::move(v));
}

bool MonotoneMap::is_identity() const
{
    return domain_dim() == codomain_ && is_injective();
}

bool MonotoneMap::is_injective() const
{
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1])
            return false;
    return true;
}

bool MonotoneMap::is_surjective() const
{
    if (values_.front() != 0 || values_.back() != codomain_)
        return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[i - 1] + 1)
            return false;
    return true;
}

std::vector<int> MonotoneMap::elementary_degeneracies() const
{
    if (!is_surjective())
        throw InvalidArgument("elementary_degeneracies: not a surjection " + to_string());
    std::vector<int> out;
    for (int i = domain_dim() - 1; i >= 0; --i)
        if (values_[static_cast<std::size_t>(i)] == values_[static_cast<std::size_t>(i) + 1])
            out.push_back(i);
    return out;
}

std::vector<int> MonotoneMap::missing_values() const
{
    std::vector<int> out;
    std::size_t k = 0;
    for (int j = 0; j <= codomain_; ++j) {
        while (k < values_.size() && values_[k] < j)
            ++k;
        if (k == values_.size() || values_[k] != j)
            out.push_back(j);
    }
    return out;
}

std::string MonotoneMap::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f)
{
    os << '(';
    for (std::size_t i = 0; i < f.values().size(); ++i)
        os << (i ? "," : "") << f.values()[i];
    return os << "):[" << f.domain_dim() << "]->[" << f.codomain_dim() << ']';
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g)
{
    if (g.codomain_dim() != f.domain_dim())
        throw DimensionMismatch("compose: codomain of " + g.to_string() + " is not the domain of " + f.to_string());
    std::vector<int> v;
    v.reserve(g.values().size());
    for (int x : g.values())
        v.push_back(f(x));
    return MonotoneMap(f.codomain_dim(), std::move(v));
}

EzFactors ez_factorize(const MonotoneMap& f)
{
    // image, then collapse onto it
    std::vector<int> image;
    std::vector<int> surj;
    surj.reserve(f.values().size());
    for (int x : f.values()) {
        if (image.empty() || image.back() != x)
            image.push_back(x);
        surj.push_back(static_cast<int>(image.size()) - 1);
    }
    const int k = static_cast<int>(image.size()) - 1;
    return {MonotoneMap(k, std::move(surj)), MonotoneMap(f.codomain_dim(), std::move(image))};
}

}  // namespace simpset
