#pragma once

// Representations of type-A line quivers over a prime field.
//
// Indecomposables are interval modules [lo, hi] (vertices 0-based internally,
// 1-based in text). Modules are held as canonical multisets of intervals and
// materialized to explicit arrow matrices only when a linear system is solved.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profilium/linalg.hpp"

namespace profilium {

enum class Arrow : char { Right = '>', Left = '<' };

class LineQuiver {
public:
    static constexpr std::size_t kMinVertices = 2;
    static constexpr std::size_t kMaxVertices = 8;

    /// Throws ContractError for a vertex count outside [2, 8] or a non-prime field.
    LineQuiver(std::vector<Arrow> orientation, std::uint32_t field_prime = 2);

    std::size_t vertex_count() const noexcept { return orientation_.size() + 1; }
    std::size_t arrow_count() const noexcept { return orientation_.size(); }
    const std::vector<Arrow>& orientation() const noexcept { return orientation_; }
    std::size_t arrow_source(std::size_t a) const noexcept {
        return orientation_[a] == Arrow::Right ? a : a + 1;
    }
    std::size_t arrow_target(std::size_t a) const noexcept {
        return orientation_[a] == Arrow::Right ? a + 1 : a;
    }
    const Coefficients& field() const noexcept { return field_; }

    /// `A<n>:<orientation>;q=<p>`
    std::string to_string() const;

    friend bool operator==(const LineQuiver&, const LineQuiver&) = default;

private:
    std::vector<Arrow> orientation_;
    Coefficients field_;
};

/// Parse `A<n>:<orientation>[;q=<p>]`.
LineQuiver parse_line_quiver(std::string_view text);

struct DimVector {
    std::vector<std::int64_t> dims;

    std::int64_t total() const;
    std::string to_string() const;
    friend bool operator==(const DimVector&, const DimVector&) = default;
};

struct Interval {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    bool contains(std::size_t v) const noexcept { return lo <= v && v <= hi; }
    std::string dim_string(std::size_t vertices) const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical summand order: ascending by dimension-vector string.
bool canonical_before(const Interval& a, const Interval& b) noexcept;

class QuiverModule {
public:
    QuiverModule() = default;
    QuiverModule(std::size_t vertices, std::vector<Interval> parts);
    static QuiverModule indecomposable(std::size_t vertices, Interval i) { return {vertices, {i}}; }

    std::size_t vertices() const noexcept { return vertices_; }
    const std::vector<Interval>& parts() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    std::size_t length() const noexcept { return parts_.size(); }
    DimVector dim_vector() const;
    /// Summands joined by '+', e.g. `0110+0111`; `0` for the zero module.
    std::string to_string() const;

    friend bool operator==(const QuiverModule&, const QuiverModule&) = default;

private:
    std::size_t vertices_ = 0;
    std::vector<Interval> parts_;
};

QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b);
std::vector<QuiverModule> indecomposable_summands(const QuiverModule& m);

/// Dim-vector strings (`0110`), interval syntax (`[2,3]`) or `0`, joined by `+`.
QuiverModule parse_quiver_module(std::string_view text, const LineQuiver& q);

struct MaterializedRep {
    DimVector dims;
    /// One matrix per arrow: dim(target) x dim(source).
    std::vector<ExactMatrix> arrow_maps;
};

MaterializedRep materialize(const LineQuiver& q, const QuiverModule& m);

/// All intervals [i, j] in lexicographic order.
std::vector<Interval> indecomposables(const LineQuiver& q);
/// Vertices reachable from v by directed paths.
Interval projective(const LineQuiver& q, std::size_t v);
/// Vertices from which v is reachable.
Interval injective(const LineQuiver& q, std::size_t v);
inline Interval simple(std::size_t v) {
    return {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v)};
}
bool is_projective(const LineQuiver& q, const QuiverModule& m);
bool is_injective(const LineQuiver& q, const QuiverModule& m);

/// A morphism as one matrix per vertex (target dim x source dim).
using QuiverMap = std::vector<ExactMatrix>;

/// Solution space of the intertwiner system phi_t * M_a = N_a * phi_s.
class QuiverHom {
public:
    QuiverHom(const LineQuiver& q, const QuiverModule& source, const QuiverModule& target);

    std::size_t dim() const noexcept { return basis_.cols(); }
    const std::vector<QuiverMap>& basis() const noexcept { return maps_; }
    const MaterializedRep& source_rep() const noexcept { return source_; }
    const MaterializedRep& target_rep() const noexcept { return target_; }

    /// Stack a map into one column in the unknown layout of the system.
    ExactMatrix flatten(const QuiverMap& map) const;
    /// Coordinates of each map (given as flattened columns) in the basis.
    ExactMatrix coordinates(const ExactMatrix& flattened_columns) const;

private:
    Coefficients field_;
    MaterializedRep source_;
    MaterializedRep target_;
    std::vector<std::size_t> offsets_;
    ExactMatrix basis_;  // unknowns x dim
    std::vector<QuiverMap> maps_;
};

std::size_t hom_dim(const LineQuiver& q, const QuiverModule& m, const QuiverModule& n);

/// Per-vertex dimension of M / rad M.
DimVector top(const LineQuiver& q, const MaterializedRep& r);
/// Per-vertex dimension of soc M.
DimVector socle(const LineQuiver& q, const MaterializedRep& r);

struct QuiverPresentation {
    QuiverModule cover;
    QuiverModule target;
    QuiverMap components;
};

struct QuiverEmbedding {
    QuiverModule source;
    QuiverModule envelope;
    QuiverMap components;
};

QuiverPresentation projective_cover(const LineQuiver& q, const QuiverModule& m);
QuiverEmbedding injective_envelope(const LineQuiver& q, const QuiverModule& m);
/// Non-minimal cover: one copy of P(v) for every basis vector of Hom(P(v), M).
QuiverPresentation canonical_presentation(const LineQuiver& q, const QuiverModule& m);

std::int64_t euler_form(const LineQuiver& q, const DimVector& d, const DimVector& e);
std::size_t ext1_dim(const LineQuiver& q, const QuiverModule& m, const QuiverModule& n);

/// Integer matrix whose column i is dim P(i).
ExactMatrix cartan_matrix(const LineQuiver& q);
/// -C^T C^{-1}; maps dim M to dim tau M for M without projective summands.
ExactMatrix coxeter_matrix(const LineQuiver& q);

std::optional<Interval> tau(const LineQuiver& q, const Interval& m);
/// Drops projective summands and translates the rest.
QuiverModule tau(const LineQuiver& q, const QuiverModule& m);

bool is_tilting(const LineQuiver& q, const QuiverModule& t);

/// N is a quotient of a sum of copies of t (sum of images of Hom(t, N) is N).
bool is_generated_by(const LineQuiver& q, const QuiverModule& t, const QuiverModule& n);
/// N embeds in a product of copies of t (intersection of kernels of Hom(N, t) is 0).
bool is_cogenerated_by(const LineQuiver& q, const QuiverModule& t, const QuiverModule& n);

/// Rows: coordinates in Hom(m, g.target); columns: g*h over a basis of Hom(m, g.cover).
ExactMatrix postcomposition_matrix(const LineQuiver& q, const QuiverModule& m,
                                   const QuiverPresentation& g);
/// Rows: coordinates in Hom(e.source, m); columns: f*e over a basis of Hom(e.envelope, m).
ExactMatrix restriction_matrix(const LineQuiver& q, const QuiverModule& m, const QuiverEmbedding& e);

}  // namespace profilium
