// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_GF2_H
#define LAMBDA_FORGE_GF2_H

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lambda_forge {

constexpr int kMaxQubits = 16;

/// A point v = (v_Z, v_X) of E_n. Bit k of `z` / `x` belongs to qubit k (0-based).
struct PauliPoint {
    int n = 0;
    uint32_t z = 0;
    uint32_t x = 0;

    PauliPoint() = default;
    PauliPoint(int n, uint32_t z, uint32_t x);

    static PauliPoint zero(int n) { return PauliPoint(n, 0, 0); }
    static PauliPoint X(int n, int k) { return PauliPoint(n, 0, 1u << k); }
    static PauliPoint Z(int n, int k) { return PauliPoint(n, 1u << k, 0); }
    static PauliPoint Y(int n, int k) { return PauliPoint(n, 1u << k, 1u << k); }
    static PauliPoint from_label(std::string_view label);

    bool is_zero() const { return z == 0 && x == 0; }
    /// Number of qubits carrying a Y factor (|v_Z & v_X|).
    int y_weight() const;
    /// Packed 64-bit word, z-half low; used for ordering and echelon pivots.
    uint64_t word() const { return (uint64_t(x) << 32) | z; }
    std::string label() const;

    PauliPoint operator+(const PauliPoint &other) const;
    PauliPoint &operator+=(const PauliPoint &other);
    bool operator==(const PauliPoint &other) const = default;
    std::strong_ordering operator<=>(const PauliPoint &other) const;

    /// Split into the first m qubits and the remaining n-m qubits.
    PauliPoint head(int m) const;
    PauliPoint tail(int m) const;
    /// Concatenate: this on the first qubits, `rest` on the following ones.
    PauliPoint concat(const PauliPoint &rest) const;
    /// Place this point on qubits [offset, offset+n) of an N-qubit register.
    PauliPoint embed(int big_n, int offset) const;
};

using PointSet = std::set<PauliPoint>;

int symplectic_form(const PauliPoint &v, const PauliPoint &w);
inline bool commute(const PauliPoint &v, const PauliPoint &w) { return symplectic_form(v, w) == 0; }

/// All 4^n points of E_n in increasing order.
std::vector<PauliPoint> all_points(int n);
std::vector<PauliPoint> nonzero_points(int n);

/// Linear subspace of E_n kept in reduced row echelon form (pivot = highest bit of word()).
class Subspace {
   public:
    Subspace() = default;
    explicit Subspace(int n) : n_(n) {}

    static Subspace span(int n, const std::vector<PauliPoint> &vectors);
    static Subspace full(int n);

    int n() const { return n_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<PauliPoint> &basis() const { return basis_; }
    size_t size() const { return size_t(1) << basis_.size(); }

    bool contains(const PauliPoint &v) const;
    bool is_isotropic() const;
    bool is_maximal_isotropic() const { return dim() == n_ && is_isotropic(); }
    /// Coordinates of v in the echelon basis (bit i = basis[i]); v must lie in the span.
    uint64_t coordinates(const PauliPoint &v) const;
    /// Elements in the order of their basis coordinates 0, 1, 2, ...
    std::vector<PauliPoint> elements() const;
    PointSet element_set() const;
    /// Reduce v modulo this subspace.
    PauliPoint reduce(PauliPoint v) const;

    Subspace with(const PauliPoint &v) const;
    Subspace sum(const Subspace &other) const;
    Subspace intersect(const Subspace &other) const;
    bool is_subspace_of(const Subspace &other) const;

    std::string to_string() const;

    bool operator==(const Subspace &other) const = default;
    std::strong_ordering operator<=>(const Subspace &other) const;

   private:
    void insert(PauliPoint v);
    int n_ = 0;
    std::vector<PauliPoint> basis_;
};

Subspace perp(const Subspace &w);
Subspace perp_of_point(const PauliPoint &a);

/// All maximal isotropic subspaces of E_n (n <= bound), sorted.
std::vector<Subspace> enumerate_maximal_isotropics(int n, int bound = 4);
/// All isotropic subspaces of E_n of every dimension (including {0}), sorted.
std::vector<Subspace> enumerate_isotropics(int n, int bound = 3);

/// Smallest superset of `points` (plus 0) closed under v + w for commuting v, w.
PointSet closure_under_inference(const PointSet &points, int n);

/// Dense linear system over Z_2.  Each equation is a set of unknown indices plus a right-hand bit.
class Gf2System {
   public:
    explicit Gf2System(int unknowns) : unknowns_(unknowns) {}
    void add_equation(const std::vector<int> &vars, int rhs);
    int unknowns() const { return unknowns_; }
    /// Returns false when inconsistent.  On success fills a particular solution and a nullspace basis.
    bool solve(std::vector<uint8_t> &particular, std::vector<std::vector<uint8_t>> &nullspace) const;
    bool consistent() const;

   private:
    int unknowns_;
    std::vector<std::vector<uint8_t>> rows_;
};

/// Inverse of a square matrix over Z_2 given as rows of bits; throws if singular.
std::vector<std::vector<uint8_t>> gf2_inverse(std::vector<std::vector<uint8_t>> m);

}  // namespace lambda_forge

template <>
struct std::hash<lambda_forge::PauliPoint> {
    size_t operator()(const lambda_forge::PauliPoint &p) const noexcept {
        return std::hash<uint64_t>{}(p.word() * 131 + uint64_t(p.n));
    }
};

#endif
