#pragma once

#include <cstdint>
#include <stdexcept>

#include "eistri/core.hpp"
#include "eistri/params.hpp"

namespace eistri {

/// Thrown by to_sub / from_sub when the input is not a primitive member
/// of the expected source family.
struct not_in_family : std::domain_error {
    explicit not_in_family(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by apply_matrix when the product has a component below 1,
/// which means the matrix does not belong to the triple's family.
struct nonpositive_result : std::domain_error {
    explicit nonpositive_result(const std::string& what) : std::domain_error(what) {}
};

/// Sends an ordered 60-degree triple (a,b,c) to (a,c,b-c); determinant -1.
inline constexpr gen_matrix to_sub_matrix = make_matrix(1, 0, 0,
                                                        0, 0, 1,
                                                        0, 1, -1);

/// Inverse map, (a,b,c) back to (a,b+c,b).
inline constexpr gen_matrix from_sub_matrix = make_matrix(1, 0, 0,
                                                          0, 1, 1,
                                                          0, 1, 0);

inline constexpr gen_matrix identity_matrix = make_matrix(1, 0, 0,
                                                          0, 1, 0,
                                                          0, 0, 1);

inline gen_matrix mat_mul(const gen_matrix& lhs, const gen_matrix& rhs) {
    gen_matrix out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            std::int64_t sum = 0;
            for (int k = 0; k < 3; ++k) {
                sum = checked_add(sum, checked_mul(lhs.m[i][k], rhs.m[k][j]));
            }
            out.m[i][j] = sum;
        }
    }
    return out;
}

/// S * M * S^-1, the transport that turns a 60-degree tree generator
/// into its 120-degree counterpart.
inline gen_matrix conjugate(const gen_matrix& mat) {
    return mat_mul(mat_mul(to_sub_matrix, mat), from_sub_matrix);
}

/// Exact matrix-vector product. The result must land back in positive
/// side lengths; anything else is a misuse (wrong family, wrong matrix)
/// and fails loudly.
inline triple apply_matrix(const gen_matrix& mat, const triple& t) {
    std::int64_t out[3];
    const std::int64_t in[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) {
        std::int64_t sum = 0;
        for (int k = 0; k < 3; ++k) {
            sum = checked_add(sum, checked_mul(mat.m[i][k], in[k]));
        }
        out[i] = sum;
    }
    if (out[0] < 1 || out[1] < 1 || out[2] < 1) {
        throw nonpositive_result("matrix product left the positive orthant");
    }
    return triple(out[0], out[1], out[2]);
}

/// Exact inverse of a matrix with determinant +-1: the adjugate divided
/// by the determinant, which stays integral.
inline gen_matrix unimodular_inverse(const gen_matrix& g) {
    const std::int64_t d = det(g);
    if (d != 1 && d != -1) {
        throw std::domain_error("matrix is not unimodular");
    }
    const auto& m = g.m;
    gen_matrix adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // adj[i][j] is the (j,i) cofactor; the index rotation absorbs the sign
            adj.m[i][j] = checked_sub(checked_mul(m[r0][c0], m[r1][c1]),
                                      checked_mul(m[r0][c1], m[r1][c0]));
        }
    }
    if (d == -1) {
        for (auto& row : adj.m) {
            for (auto& v : row) {
                v = -v;
            }
        }
    }
    return adj;
}

/// The family bijection: ordered non-equilateral primitive 60-degree
/// (a,b,c) with b > c maps to primitive 120-degree (a,c,b-c).
inline triple to_sub(const triple& t) {
    if (t.b == t.c) {
        throw degenerate_error("the equilateral triple has no 120-degree image");
    }
    if (t.b < t.c) {
        throw std::domain_error("to_sub requires the ordered form b > c");
    }
    if (!is_primitive(family::sixty, t)) {
        throw not_in_family("to_sub requires a primitive 60-degree triple");
    }
    return triple(t.a, t.c, t.b - t.c);
}

/// Inverse bijection: primitive 120-degree (a,b,c) maps to the ordered
/// primitive 60-degree triple (a,b+c,b).
inline triple from_sub(const triple& t) {
    if (!is_primitive(family::one_twenty, t)) {
        throw not_in_family("from_sub requires a primitive 120-degree triple");
    }
    return triple(t.a, checked_add(t.b, t.c), t.b);
}

}  // namespace eistri
