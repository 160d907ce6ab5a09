#include "profilium/ab_modules.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "profilium/errors.hpp"

namespace profilium {

namespace {

BigInt power(std::uint32_t p, std::uint32_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

bool part_before(const CyclicPart& a, const CyclicPart& b) {
    const BigInt oa = a.order(), ob = b.order();
    if (oa != ob) return oa > ob;
    return a.prime > b.prime;
}

BigInt reduce_by(const BigInt& x, const BigInt& order) {
    if (order == 0) return x;
    BigInt r = x % order;
    if (r < 0) r += order;
    return r;
}

std::vector<BigInt> orders_of(const AbModule& m) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < m.generator_count(); ++i) out.push_back(m.generator_order(i));
    return out;
}

void require_same_ring(const AbModule& a, const AbModule& b, const char* op) {
    if (!(a.ring() == b.ring())) {
        throw ContractError(std::string(op) + ": modules live over different rings (" +
                            a.ring().to_string() + " vs " + b.ring().to_string() + ")");
    }
}

// Coordinates and relation orders appended as a decision matrix over base.
ExactMatrix decision_matrix(const HomBasis& target, const std::vector<std::vector<BigInt>>& images,
                            const Coefficients& base) {
    const std::size_t rows = target.generators.size();
    std::vector<std::vector<BigInt>> cols = images;
    for (std::size_t g = 0; g < rows; ++g) {
        if (target.orders[g] == 0) continue;
        if (base.is_modular() && base.reduce(target.orders[g]) == 0) continue;
        std::vector<BigInt> c(rows, 0);
        c[g] = target.orders[g];
        cols.push_back(std::move(c));
    }
    ExactMatrix out(base, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) out.set(i, j, cols[j][i]);
    return out;
}

}  // namespace

BigInt CyclicPart::order() const { return power(prime, exponent); }

AbModule::AbModule(Coefficients ring, std::uint32_t free_rank, std::vector<CyclicPart> parts)
    : ring_(ring), free_rank_(free_rank), parts_(std::move(parts)) {
    switch (ring_.kind()) {
        case Coefficients::Kind::PrimeField:
            throw ContractError("abelian modules live over Z or Z/p^k, not a prime field");
        case Coefficients::Kind::CyclicRing:
            if (free_rank_ != 0) {
                throw ContractError("over Z/p^k write free summands as Z/p^k parts");
            }
            for (const auto& c : parts_) {
                if (c.prime != ring_.prime() || c.exponent < 1 || c.exponent > ring_.exponent()) {
                    throw ContractError("part Z/" + std::to_string(c.prime) + "^" +
                                        std::to_string(c.exponent) + " is not a Z/" +
                                        std::to_string(ring_.prime()) + "^" +
                                        std::to_string(ring_.exponent()) + "-module");
                }
            }
            break;
        case Coefficients::Kind::Integers:
            for (const auto& c : parts_) {
                if (!is_prime(c.prime) || c.exponent < 1) {
                    throw ContractError("torsion parts must be prime powers p^e with e >= 1");
                }
                if (c.order() >= (BigInt(1) << 31)) {
                    throw ContractError("torsion part orders must stay below 2^31");
                }
            }
            break;
    }
    std::sort(parts_.begin(), parts_.end(), part_before);
}

BigInt AbModule::generator_order(std::size_t i) const {
    if (i < free_rank_) return 0;
    return parts_.at(i - free_rank_).order();
}

std::string AbModule::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::string> terms;
    if (free_rank_ == 1) terms.emplace_back("Z");
    if (free_rank_ > 1) terms.push_back("Z^" + std::to_string(free_rank_));
    for (const auto& c : parts_) {
        if (ring_.kind() == Coefficients::Kind::Integers || c.exponent == 1) {
            if (ring_.kind() == Coefficients::Kind::Integers) {
                terms.push_back("Z/" + c.order().get_str());
            } else {
                terms.push_back("Z/" + std::to_string(c.prime));
            }
        } else {
            terms.push_back("Z/" + std::to_string(c.prime) + "^" + std::to_string(c.exponent));
        }
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i];
    }
    return out;
}

AbModule direct_sum(const AbModule& a, const AbModule& b) {
    require_same_ring(a, b, "direct_sum");
    std::vector<CyclicPart> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return AbModule(a.ring(), a.free_rank() + b.free_rank(), std::move(parts));
}

std::vector<AbModule> indecomposable_summands(const AbModule& m) {
    std::vector<AbModule> out;
    for (std::uint32_t i = 0; i < m.free_rank(); ++i) out.push_back(AbModule::free(1));
    for (const auto& c : m.parts()) out.push_back(AbModule(m.ring(), 0, {c}));
    return out;
}

std::vector<AbModule> summands(const AbModule& m) {
    // Multiplicities of each distinct indecomposable; enumerate all sub-multisets.
    std::vector<std::pair<AbModule, std::uint32_t>> kinds;
    for (auto& s : indecomposable_summands(m)) {
        if (!kinds.empty() && kinds.back().first == s) {
            ++kinds.back().second;
        } else {
            kinds.emplace_back(s, 1);
        }
    }
    std::vector<AbModule> out{AbModule::zero(m.ring())};
    for (const auto& [kind, mult] : kinds) {
        std::vector<AbModule> next;
        for (const auto& base : out) {
            AbModule acc = base;
            next.push_back(acc);
            for (std::uint32_t c = 0; c < mult; ++c) {
                acc = direct_sum(acc, kind);
                next.push_back(acc);
            }
        }
        out = std::move(next);
    }
    return out;
}

AbModule parse_ab_module(std::string_view text, const Coefficients& ring) {
    if (ring.kind() == Coefficients::Kind::PrimeField) {
        throw ContractError("abelian module literals need ring Z or Zmod:p^k");
    }
    std::uint32_t free_rank = 0;
    std::vector<CyclicPart> parts;
    std::size_t pos = 0;
    bool any = false;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why, std::size_t at) -> ParseError {
        std::size_t end = at;
        while (end < text.size() && text[end] != '+' &&
               !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        std::string token(text.substr(at, std::max<std::size_t>(end - at, 1)));
        if (at >= text.size()) token = "<end>";
        return ParseError(why, token, at);
    };
    auto read_number = [&]() -> std::uint64_t {
        skip_ws();
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v >= (1ull << 31)) throw fail("number too large", start);
            ++pos;
        }
        if (pos == start) throw fail("expected a number", start);
        return v;
    };
    for (;;) {
        skip_ws();
        const std::size_t term_start = pos;
        if (pos >= text.size()) throw fail("expected a summand", pos);
        if (text[pos] == '0') {
            ++pos;
        } else if (text[pos] == 'Z') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                const std::uint64_t n = read_number();
                std::uint64_t e = 0;
                skip_ws();
                const bool explicit_power = pos < text.size() && text[pos] == '^';
                if (explicit_power) {
                    ++pos;
                    e = read_number();
                }
                if (explicit_power) {
                    if (!is_prime(n) || e == 0) throw fail("Z/p^e needs a prime p and e >= 1", term_start);
                    parts.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(e)});
                } else {
                    if (n == 0) throw fail("Z/0 is not allowed; write Z", term_start);
                    // CRT split into prime powers.
                    std::uint64_t rest = n;
                    for (std::uint64_t p = 2; p * p <= rest || rest > 1; ++p) {
                        if (p * p > rest) p = rest;
                        std::uint32_t k = 0;
                        while (rest % p == 0) {
                            rest /= p;
                            ++k;
                        }
                        if (k) parts.push_back({static_cast<std::uint32_t>(p), k});
                    }
                }
            } else if (pos < text.size() && text[pos] == '^') {
                ++pos;
                free_rank += static_cast<std::uint32_t>(read_number());
            } else {
                free_rank += 1;
            }
        } else {
            throw fail("unexpected token", pos);
        }
        any = true;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw fail("expected '+'", pos);
        ++pos;
    }
    if (!any) throw fail("empty module literal", 0);
    if (ring.kind() == Coefficients::Kind::CyclicRing) {
        if (free_rank != 0) throw fail("free summand Z is only available over ring Z", 0);
        for (const auto& c : parts) {
            if (c.prime != ring.prime() || c.exponent > ring.exponent()) {
                throw fail("summand is not a module over " + ring.to_string(), 0);
            }
        }
    }
    try {
        return AbModule(ring, free_rank, std::move(parts));
    } catch (const ContractError& e) {
        throw fail(e.what(), 0);
    }
}

bool is_projective(const AbModule& m) {
    if (m.ring().kind() == Coefficients::Kind::Integers) return m.parts().empty();
    return std::all_of(m.parts().begin(), m.parts().end(),
                       [&](const CyclicPart& c) { return c.exponent == m.ring().exponent(); });
}

bool is_injective(const AbModule& m) {
    if (m.ring().kind() == Coefficients::Kind::Integers) return m.is_zero();
    return is_projective(m);
}

bool HomBasis::is_finite() const {
    return std::none_of(orders.begin(), orders.end(), [](const BigInt& o) { return o == 0; });
}

BigInt HomBasis::cardinality() const {
    if (!is_finite()) throw ContractError("Hom group is infinite");
    BigInt c = 1;
    for (const auto& o : orders) c *= o;
    return c;
}

std::vector<BigInt> HomBasis::coordinates(const ExactMatrix& map) const {
    std::vector<BigInt> out;
    out.reserve(cells.size());
    const ExactMatrix reduced = reduce_rows(target, map);
    for (std::size_t g = 0; g < cells.size(); ++g) {
        const BigInt& x = reduced(cells[g].first, cells[g].second);
        if (!mpz_divisible_p(x.get_mpz_t(), steps[g].get_mpz_t())) {
            throw InternalError("coordinates: matrix is not a homomorphism " + source.to_string() +
                                " -> " + target.to_string());
        }
        out.push_back(reduce_by(x / steps[g], orders[g]));
    }
    return out;
}

HomBasis hom(const AbModule& m, const AbModule& n) {
    require_same_ring(m, n, "hom");
    HomBasis h{m, n, {}, {}, {}, {}};
    const auto src = orders_of(m);
    const auto tgt = orders_of(n);
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        for (std::size_t j = 0; j < src.size(); ++j) {
            BigInt step, order;
            if (src[j] == 0) {
                step = 1;
                order = tgt[i];
            } else if (tgt[i] == 0) {
                continue;
            } else {
                BigInt g = gcd(src[j], tgt[i]);
                if (g == 1) continue;
                step = tgt[i] / g;
                order = g;
            }
            ExactMatrix e(Coefficients::integers(), tgt.size(), src.size());
            e.set(i, j, step);
            h.generators.push_back(std::move(e));
            h.orders.push_back(order);
            h.cells.emplace_back(i, j);
            h.steps.push_back(step);
        }
    }
    return h;
}

ExactMatrix reduce_rows(const AbModule& target, ExactMatrix map) {
    for (std::size_t i = 0; i < map.rows(); ++i) {
        const BigInt o = target.generator_order(i);
        if (o == 0) continue;
        for (std::size_t j = 0; j < map.cols(); ++j) map.set(i, j, reduce_by(map(i, j), o));
    }
    return map;
}

ExactMatrix compose(const ExactMatrix& g, const ExactMatrix& h, const AbModule& target) {
    return reduce_rows(target, g * h);
}

bool is_homomorphism(const AbModule& source, const AbModule& target, const ExactMatrix& map) {
    if (map.rows() != target.generator_count() || map.cols() != source.generator_count()) return false;
    for (std::size_t j = 0; j < map.cols(); ++j) {
        const BigInt oj = source.generator_order(j);
        if (oj == 0) continue;
        for (std::size_t i = 0; i < map.rows(); ++i) {
            const BigInt oi = target.generator_order(i);
            const BigInt v = oj * map(i, j);
            if (oi == 0 ? v != 0 : !mpz_divisible_p(v.get_mpz_t(), oi.get_mpz_t())) return false;
        }
    }
    return true;
}

bool is_epimorphism(const AbModule& target, const ExactMatrix& map) {
    ExactMatrix rel(Coefficients::integers(), target.generator_count(), target.generator_count());
    for (std::size_t i = 0; i < target.generator_count(); ++i) rel.set(i, i, target.generator_order(i));
    return is_surjective(hstack(reduce_rows(target, map), rel));
}

PresentationMap projective_presentation(const AbModule& n) {
    const std::size_t k = n.generator_count();
    AbModule cover = n.ring().kind() == Coefficients::Kind::Integers
                         ? AbModule::free(static_cast<std::uint32_t>(k))
                         : AbModule(n.ring(), 0,
                                    std::vector<CyclicPart>(k, {n.ring().prime(), n.ring().exponent()}));
    return {std::move(cover), n, ExactMatrix::identity(Coefficients::integers(), k)};
}

Embedding injective_envelope(const AbModule& n) {
    if (n.ring().kind() != Coefficients::Kind::CyclicRing) {
        throw UnsupportedEnvelope(
            "injective envelopes over Z are not finitely generated; subinjectivity needs ring Zmod:p^k "
            "or a quiver");
    }
    const std::uint32_t p = n.ring().prime(), k = n.ring().exponent();
    const std::size_t c = n.generator_count();
    AbModule env(n.ring(), 0, std::vector<CyclicPart>(c, {p, k}));
    ExactMatrix e(Coefficients::integers(), c, c);
    for (std::size_t j = 0; j < c; ++j) e.set(j, j, power(p, k - n.parts()[j].exponent));
    return {n, std::move(env), std::move(e)};
}

Coefficients base_coefficients(const Coefficients& ring) {
    if (ring.kind() == Coefficients::Kind::CyclicRing) return ring;
    return Coefficients::integers();
}

ExactMatrix postcomposition_matrix(const AbModule& m, const PresentationMap& g) {
    require_same_ring(m, g.target, "postcomposition_matrix");
    const HomBasis into_cover = hom(m, g.cover);
    const HomBasis into_target = hom(m, g.target);
    std::vector<std::vector<BigInt>> images;
    for (const auto& h : into_cover.generators) {
        images.push_back(into_target.coordinates(compose(g.matrix, h, g.target)));
    }
    return decision_matrix(into_target, images, base_coefficients(m.ring()));
}

ExactMatrix restriction_matrix(const AbModule& m, const Embedding& e) {
    require_same_ring(m, e.source, "restriction_matrix");
    const HomBasis from_envelope = hom(e.envelope, m);
    const HomBasis from_source = hom(e.source, m);
    std::vector<std::vector<BigInt>> images;
    for (const auto& f : from_envelope.generators) {
        images.push_back(from_source.coordinates(compose(f, e.matrix, m)));
    }
    return decision_matrix(from_source, images, base_coefficients(m.ring()));
}

}  // namespace profilium
