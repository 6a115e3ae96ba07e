#ifndef SPHERE_ARBOR_BARYCENTRIC_HPP
#define SPHERE_ARBOR_BARYCENTRIC_HPP

#include <sphere_arbor/errors.hpp>
#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/rational.hpp>

#include <vector>

namespace sphere_arbor {

/// Stirling number of the second kind S(j,i).
inline BigInt stirling2(int j, int i)
{
    if (j < 0 || i < 0)
        throw InvalidInput("stirling2: arguments must be non-negative");
    if (i > j)
        return 0;
    // row[k] = S(m,k) for the current m
    std::vector<BigInt> row(i + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= j; ++m)
        for (int k = std::min(m, i); k >= 0; --k)
            row[k] = k == 0 ? BigInt(0) : k * row[k] + row[k - 1];
    return row[i];
}

inline BigInt factorial(int n)
{
    BigInt r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

/// (d+1)×(d+1) matrix with A[i−1][j−1] = i!·S(j,i); maps f-vectors of graphs
/// of dimension ≤ d to the f-vector of their Barycentric refinement.
struct RefinementMatrix {
    int dimension = 0;
    std::vector<std::vector<BigInt>> entries;

    std::size_t size() const { return entries.size(); }

    std::vector<BigInt> apply(const std::vector<BigInt>& f) const
    {
        if (f.size() != size())
            throw InvalidInput("RefinementMatrix::apply: vector length must be d+1");
        std::vector<BigInt> out(size(), 0);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                out[i] += entries[i][j] * f[j];
        return out;
    }
};

inline RefinementMatrix refinement_matrix(int d)
{
    if (d < 0)
        throw InvalidInput("refinement_matrix: d must be non-negative");
    RefinementMatrix a{d, std::vector<std::vector<BigInt>>(d + 1, std::vector<BigInt>(d + 1, 0))};
    for (int i = 1; i <= d + 1; ++i)
        for (int j = 1; j <= d + 1; ++j)
            a.entries[i - 1][j - 1] = factorial(i) * stirling2(j, i);
    return a;
}

/// A·f for an f-vector padded or truncated to dimension d.
inline std::vector<BigInt> refine_f_vector(const FVector& f, int d)
{
    std::vector<BigInt> v(d + 1);
    for (int k = 0; k <= d; ++k)
        v[k] = f[k];
    return refinement_matrix(d).apply(v);
}

/// Eigenvector of A for the eigenvalue (d+1)!, normalized to last entry 1,
/// by back-substitution on the upper-triangular system (A − (d+1)!·I)x = 0.
inline std::vector<Rational> perron_vector(int d)
{
    auto a = refinement_matrix(d);
    const int n = d + 1;
    const BigInt lambda = factorial(n);
    std::vector<Rational> x(n, 0);
    x[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) {
        Rational s = 0;
        for (int j = i + 1; j < n; ++j)
            s += Rational(a.entries[i][j]) * x[j];
        x[i] = s / Rational(lambda - a.entries[i][i]);
    }
    return x;
}

inline constexpr int limit_constant_max_d = 12;

/// c_d = lim f₁/f₀ under iterated refinement of a d-dimensional complex.
inline Rational limit_constant(int d)
{
    if (d < 1 || d > limit_constant_max_d)
        throw InvalidInput("limit_constant: d must be in 1..12");
    auto x = perron_vector(d);
    return x[1] / x[0];
}

/// Smallest integer > c_d for d ≥ 1 except the sphere value 3 at d = 2, and 1
/// for d = 0. Tabulated for 0 ≤ d ≤ 10.
inline int conjectured_max_arboricity(int d)
{
    if (d < 0 || d > 10)
        throw Refusal("conjectured_max_arboricity: tabulated for 0 <= d <= 10");
    if (d == 0)
        return 1;
    if (d == 2)
        return 3;
    return static_cast<int>(floor(limit_constant(d))) + 1;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_BARYCENTRIC_HPP
