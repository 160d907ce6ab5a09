#pragma once

// Finitely generated abelian groups and finite modules over Z/p^k.
//
// A module is stored in canonical form: free rank plus a descending list of
// cyclic prime-power parts. Both families are Krull-Schmidt, so two modules
// are isomorphic exactly when their canonical forms are equal.
//
// Homomorphisms are matrices over the integers whose column j lists the
// coordinates of the image of source generator j. Row i is reduced modulo the
// order of target generator i (free rows are left unreduced).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profilium/linalg.hpp"

namespace profilium {

struct CyclicPart {
    std::uint32_t prime = 2;
    std::uint32_t exponent = 1;

    BigInt order() const;
    friend bool operator==(const CyclicPart&, const CyclicPart&) = default;
};

class AbModule {
public:
    /// Throws ContractError if the parts do not fit the ring.
    AbModule(Coefficients ring, std::uint32_t free_rank, std::vector<CyclicPart> parts);

    static AbModule zero(Coefficients ring) { return AbModule(ring, 0, {}); }
    static AbModule cyclic(Coefficients ring, std::uint32_t prime, std::uint32_t exponent) {
        return AbModule(ring, 0, {{prime, exponent}});
    }
    static AbModule free(std::uint32_t rank) { return AbModule(Coefficients::integers(), rank, {}); }

    const Coefficients& ring() const noexcept { return ring_; }
    std::uint32_t free_rank() const noexcept { return free_rank_; }
    const std::vector<CyclicPart>& parts() const noexcept { return parts_; }

    bool is_zero() const noexcept { return free_rank_ == 0 && parts_.empty(); }
    std::size_t generator_count() const noexcept { return free_rank_ + parts_.size(); }
    /// Additive order of generator i; 0 for a free generator.
    BigInt generator_order(std::size_t i) const;
    /// Number of indecomposable summands counted with multiplicity.
    std::size_t length() const noexcept { return generator_count(); }

    std::string to_string() const;

    friend bool operator==(const AbModule& a, const AbModule& b) {
        return a.ring_ == b.ring_ && a.free_rank_ == b.free_rank_ && a.parts_ == b.parts_;
    }

private:
    Coefficients ring_;
    std::uint32_t free_rank_;
    std::vector<CyclicPart> parts_;
};

AbModule direct_sum(const AbModule& a, const AbModule& b);

/// The indecomposable summands, with multiplicity, in canonical order.
std::vector<AbModule> indecomposable_summands(const AbModule& m);

/// Every summand up to isomorphism: all sub-multisets of the decomposition.
std::vector<AbModule> summands(const AbModule& m);

/// Parse `Z^r + Z/n + Z/p^e + ...` (or `0`) against the ring.
AbModule parse_ab_module(std::string_view text, const Coefficients& ring);

bool is_projective(const AbModule& m);
/// Over Z only 0 is injective among finitely generated groups; Z/p^k is self-injective.
bool is_injective(const AbModule& m);

struct HomBasis {
    AbModule source;
    AbModule target;
    std::vector<ExactMatrix> generators;
    /// Additive order of each generator; 0 means infinite.
    std::vector<BigInt> orders;
    /// Matrix cell carrying each generator, and the value it places there.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    std::vector<BigInt> steps;

    bool is_trivial() const noexcept { return generators.empty(); }
    bool is_finite() const;
    /// |Hom|; throws ContractError when infinite.
    BigInt cardinality() const;
    /// Coordinates of a homomorphism on the generators (reduced by their orders).
    std::vector<BigInt> coordinates(const ExactMatrix& map) const;
};

HomBasis hom(const AbModule& m, const AbModule& n);

/// True iff the matrix describes a homomorphism source -> target.
bool is_homomorphism(const AbModule& source, const AbModule& target, const ExactMatrix& map);
/// True iff the homomorphism is onto the target.
bool is_epimorphism(const AbModule& target, const ExactMatrix& map);
/// Reduce each row modulo the order of the matching target generator.
ExactMatrix reduce_rows(const AbModule& target, ExactMatrix map);
/// g after h, reduced in the target of g.
ExactMatrix compose(const ExactMatrix& g, const ExactMatrix& h, const AbModule& target);

struct PresentationMap {
    AbModule cover;   // projective
    AbModule target;
    ExactMatrix matrix;
};

PresentationMap projective_presentation(const AbModule& n);

struct Embedding {
    AbModule source;
    AbModule envelope;  // injective
    ExactMatrix matrix;
};

/// Throws UnsupportedEnvelope over the integers.
Embedding injective_envelope(const AbModule& n);

/// Coefficients over which lifting matrices are decided for this ring family.
Coefficients base_coefficients(const Coefficients& ring);

/// Rows: coordinates in Hom(m, g.target); columns: images g*h for h in Hom(m, g.cover),
/// then the relations of Hom(m, g.target). Surjective iff every map m -> N lifts through g.
ExactMatrix postcomposition_matrix(const AbModule& m, const PresentationMap& g);

/// Rows: coordinates in Hom(e.source, m); columns: restrictions f*e for f in Hom(e.envelope, m),
/// then relations. Surjective iff every map N -> m extends over the envelope.
ExactMatrix restriction_matrix(const AbModule& m, const Embedding& e);

}  // namespace profilium
