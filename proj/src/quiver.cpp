#include "profilium/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "profilium/errors.hpp"

namespace profilium {

namespace {

ExactMatrix zero_map(const Coefficients& f, std::size_t rows, std::size_t cols) {
    return ExactMatrix(f, rows, cols);
}

std::size_t dim_at(const MaterializedRep& r, std::size_t v) {
    return static_cast<std::size_t>(r.dims.dims[v]);
}

// Arrow maps into vertex v side by side: columns span the radical at v.
ExactMatrix incoming(const LineQuiver& q, const MaterializedRep& r, std::size_t v) {
    ExactMatrix acc(q.field(), dim_at(r, v), 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow_target(a) == v) acc = hstack(acc, r.arrow_maps[a]);
    }
    return acc;
}

// Arrow maps out of vertex v stacked: the kernel is the socle at v.
ExactMatrix outgoing(const LineQuiver& q, const MaterializedRep& r, std::size_t v) {
    ExactMatrix acc(q.field(), 0, dim_at(r, v));
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow_source(a) == v) acc = vstack(acc, r.arrow_maps[a]);
    }
    return acc;
}

void require_quiver(const LineQuiver& q, const QuiverModule& m) {
    if (!m.is_zero() && m.vertices() != q.vertex_count()) {
        throw ContractError("module " + m.to_string() + " does not live on " + q.to_string());
    }
}

}  // namespace

LineQuiver::LineQuiver(std::vector<Arrow> orientation, std::uint32_t field_prime)
    : orientation_(std::move(orientation)), field_(Coefficients::prime_field(field_prime)) {
    const std::size_t n = orientation_.size() + 1;
    if (n < kMinVertices || n > kMaxVertices) {
        throw ContractError("line quivers need 2 to 8 vertices, got " + std::to_string(n));
    }
}

std::string LineQuiver::to_string() const {
    std::string s = "A" + std::to_string(vertex_count()) + ":";
    for (auto a : orientation_) s += static_cast<char>(a);
    return s + ";q=" + std::to_string(field_.prime());
}

LineQuiver parse_line_quiver(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        return ParseError(why, std::string(text.substr(pos, 1).empty() ? "<end>" : text.substr(pos, 1)),
                          pos);
    };
    if (pos >= text.size() || text[pos] != 'A') throw fail("quiver spec must start with 'A'");
    ++pos;
    std::size_t n = 0;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        if (n > 100) throw fail("vertex count too large");
    }
    if (pos == digits) throw fail("expected vertex count after 'A'");
    if (pos >= text.size() || text[pos] != ':') throw fail("expected ':' after vertex count");
    ++pos;
    std::vector<Arrow> orient;
    while (pos < text.size() && (text[pos] == '>' || text[pos] == '<')) {
        orient.push_back(static_cast<Arrow>(text[pos]));
        ++pos;
    }
    if (orient.size() + 1 != n) {
        throw fail("orientation needs exactly " + std::to_string(n ? n - 1 : 0) + " arrows");
    }
    std::uint32_t prime = 2;
    if (pos < text.size()) {
        if (text.substr(pos, 3) != ";q=") throw fail("expected ';q=<p>'");
        pos += 3;
        const std::size_t start = pos;
        std::uint64_t p = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            p = p * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
            if (p >= (1ull << 31)) throw fail("field prime too large");
        }
        if (pos == start) throw fail("expected field prime");
        if (pos != text.size()) throw fail("trailing characters");
        if (!is_prime(p)) {
            pos = start;
            throw fail("field size must be prime");
        }
        prime = static_cast<std::uint32_t>(p);
    }
    try {
        return LineQuiver(std::move(orient), prime);
    } catch (const ContractError& e) {
        pos = 0;
        throw fail(e.what());
    }
}

std::int64_t DimVector::total() const { return std::accumulate(dims.begin(), dims.end(), std::int64_t{0}); }

std::string DimVector::to_string() const {
    std::string s;
    for (auto d : dims) s += std::to_string(d);
    return s;
}

std::string Interval::dim_string(std::size_t vertices) const {
    std::string s(vertices, '0');
    for (std::size_t v = lo; v <= hi; ++v) s[v] = '1';
    return s;
}

bool canonical_before(const Interval& a, const Interval& b) noexcept {
    if (a.lo != b.lo) return a.lo > b.lo;
    return a.hi < b.hi;
}

QuiverModule::QuiverModule(std::size_t vertices, std::vector<Interval> parts)
    : vertices_(vertices), parts_(std::move(parts)) {
    for (const auto& i : parts_) {
        if (i.lo > i.hi || i.hi >= vertices_) throw ContractError("interval outside the quiver");
    }
    std::sort(parts_.begin(), parts_.end(), canonical_before);
}

DimVector QuiverModule::dim_vector() const {
    DimVector d{std::vector<std::int64_t>(vertices_, 0)};
    for (const auto& i : parts_)
        for (std::size_t v = i.lo; v <= i.hi; ++v) ++d.dims[v];
    return d;
}

std::string QuiverModule::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '+';
        s += parts_[i].dim_string(vertices_);
    }
    return s;
}

QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.vertices() != b.vertices()) throw ContractError("direct_sum: modules on different quivers");
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return QuiverModule(a.vertices(), std::move(parts));
}

std::vector<QuiverModule> indecomposable_summands(const QuiverModule& m) {
    std::vector<QuiverModule> out;
    for (const auto& i : m.parts()) out.push_back(QuiverModule::indecomposable(m.vertices(), i));
    return out;
}

QuiverModule parse_quiver_module(std::string_view text, const LineQuiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<Interval> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why, std::size_t at, std::size_t len) {
        std::string tok = at < text.size() ? std::string(text.substr(at, std::max<std::size_t>(len, 1)))
                                           : std::string("<end>");
        return ParseError(why, tok, at);
    };
    bool any = false;
    for (;;) {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size()) throw fail("expected a summand", pos, 1);
        if (text[pos] == '[') {
            ++pos;
            auto number = [&]() -> std::size_t {
                skip_ws();
                const std::size_t s = pos;
                std::size_t v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
                    ++pos;
                    if (v > 1000) break;
                }
                if (pos == s) throw fail("expected a vertex number", s, 1);
                skip_ws();
                return v;
            };
            const std::size_t lo = number();
            if (pos >= text.size() || text[pos] != ',') throw fail("expected ','", pos, 1);
            ++pos;
            const std::size_t hi = number();
            if (pos >= text.size() || text[pos] != ']') throw fail("expected ']'", pos, 1);
            ++pos;
            if (lo < 1 || hi < lo || hi > n) {
                throw fail("interval must satisfy 1 <= lo <= hi <= " + std::to_string(n), start, pos - start);
            }
            parts.push_back({static_cast<std::uint32_t>(lo - 1), static_cast<std::uint32_t>(hi - 1)});
        } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            const std::string_view dv = text.substr(start, pos - start);
            if (dv == "0") {
                // zero summand
            } else {
                if (dv.size() != n) {
                    throw fail("dimension vector needs " + std::to_string(n) + " digits", start, dv.size());
                }
                std::size_t lo = n, hi = 0, ones = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if (dv[v] != '0' && dv[v] != '1') {
                        throw fail("only interval dimension vectors (0/1 entries) are supported", start + v, 1);
                    }
                    if (dv[v] == '1') {
                        lo = std::min(lo, v);
                        hi = v;
                        ++ones;
                    }
                }
                if (ones == 0) {
                    // all zeros: zero summand
                } else if (hi - lo + 1 != ones) {
                    throw fail("dimension vector is not an interval", start, dv.size());
                } else {
                    parts.push_back({static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)});
                }
            }
        } else {
            throw fail("unexpected token", pos, 1);
        }
        any = true;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw fail("expected '+'", pos, 1);
        ++pos;
    }
    if (!any) throw fail("empty module literal", 0, 1);
    return QuiverModule(n, std::move(parts));
}

MaterializedRep materialize(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    const std::size_t n = q.vertex_count();
    MaterializedRep r;
    r.dims.dims.assign(n, 0);
    // index of each part inside each vertex space
    std::vector<std::vector<std::int64_t>> index(m.parts().size(), std::vector<std::int64_t>(n, -1));
    for (std::size_t s = 0; s < m.parts().size(); ++s) {
        for (std::size_t v = 0; v < n; ++v) {
            if (m.parts()[s].contains(v)) index[s][v] = r.dims.dims[v]++;
        }
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const std::size_t src = q.arrow_source(a), tgt = q.arrow_target(a);
        ExactMatrix map = zero_map(q.field(), dim_at(r, tgt), dim_at(r, src));
        for (std::size_t s = 0; s < m.parts().size(); ++s) {
            if (index[s][src] >= 0 && index[s][tgt] >= 0) {
                map.set(static_cast<std::size_t>(index[s][tgt]), static_cast<std::size_t>(index[s][src]), 1);
            }
        }
        r.arrow_maps.push_back(std::move(map));
    }
    return r;
}

std::vector<Interval> indecomposables(const LineQuiver& q) {
    std::vector<Interval> out;
    const auto n = static_cast<std::uint32_t>(q.vertex_count());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) out.push_back({i, j});
    return out;
}

Interval projective(const LineQuiver& q, std::size_t v) {
    if (v >= q.vertex_count()) throw ContractError("vertex out of range");
    std::size_t lo = v, hi = v;
    while (hi + 1 < q.vertex_count() && q.orientation()[hi] == Arrow::Right) ++hi;
    while (lo > 0 && q.orientation()[lo - 1] == Arrow::Left) --lo;
    return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

Interval injective(const LineQuiver& q, std::size_t v) {
    if (v >= q.vertex_count()) throw ContractError("vertex out of range");
    std::size_t lo = v, hi = v;
    while (hi + 1 < q.vertex_count() && q.orientation()[hi] == Arrow::Left) ++hi;
    while (lo > 0 && q.orientation()[lo - 1] == Arrow::Right) --lo;
    return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

bool is_projective(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    return std::all_of(m.parts().begin(), m.parts().end(), [&](const Interval& i) {
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            if (projective(q, v) == i) return true;
        return false;
    });
}

bool is_injective(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    return std::all_of(m.parts().begin(), m.parts().end(), [&](const Interval& i) {
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            if (injective(q, v) == i) return true;
        return false;
    });
}

// ---------------------------------------------------------------------------

QuiverHom::QuiverHom(const LineQuiver& q, const QuiverModule& source, const QuiverModule& target)
    : field_(q.field()), source_(materialize(q, source)), target_(materialize(q, target)) {
    const std::size_t n = q.vertex_count();
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + dim_at(target_, v) * dim_at(source_, v);
    const std::size_t unknowns = offsets_[n];

    std::size_t rows = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        rows += dim_at(target_, q.arrow_target(a)) * dim_at(source_, q.arrow_source(a));
    ExactMatrix system(field_, rows, unknowns);
    const std::uint32_t p = field_.prime();
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const std::size_t s = q.arrow_source(a), t = q.arrow_target(a);
        const ExactMatrix& ma = source_.arrow_maps[a];  // M_t x M_s
        const ExactMatrix& na = target_.arrow_maps[a];  // N_t x N_s
        const std::size_t mt = dim_at(source_, t), ms = dim_at(source_, s);
        const std::size_t nt = dim_at(target_, t), ns = dim_at(target_, s);
        for (std::size_t r = 0; r < nt; ++r) {
            for (std::size_t c = 0; c < ms; ++c, ++row) {
                // (phi_t * M_a)[r][c] = sum_x phi_t[r][x] M_a[x][c]
                for (std::size_t x = 0; x < mt; ++x) {
                    if (ma(x, c) != 0) {
                        const std::size_t u = offsets_[t] + r * mt + x;
                        system.set(row, u, system(row, u) + ma(x, c));
                    }
                }
                // - (N_a * phi_s)[r][c] = - sum_y N_a[r][y] phi_s[y][c]
                for (std::size_t y = 0; y < ns; ++y) {
                    if (na(r, y) != 0) {
                        const std::size_t u = offsets_[s] + y * ms + c;
                        system.set(row, u, system(row, u) + BigInt(p) - na(r, y));
                    }
                }
            }
        }
    }
    basis_ = kernel(system);
    maps_.reserve(basis_.cols());
    for (std::size_t k = 0; k < basis_.cols(); ++k) {
        QuiverMap map;
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t nr = dim_at(target_, v), nc = dim_at(source_, v);
            ExactMatrix phi(field_, nr, nc);
            for (std::size_t r = 0; r < nr; ++r)
                for (std::size_t c = 0; c < nc; ++c) phi.set(r, c, basis_(offsets_[v] + r * nc + c, k));
            map.push_back(std::move(phi));
        }
        maps_.push_back(std::move(map));
    }
}

ExactMatrix QuiverHom::flatten(const QuiverMap& map) const {
    const std::size_t n = offsets_.size() - 1;
    ExactMatrix col(field_, offsets_[n], 1);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t nc = dim_at(source_, v);
        for (std::size_t r = 0; r < map[v].rows(); ++r)
            for (std::size_t c = 0; c < map[v].cols(); ++c) col.set(offsets_[v] + r * nc + c, 0, map[v](r, c));
    }
    return col;
}

ExactMatrix QuiverHom::coordinates(const ExactMatrix& flattened_columns) const {
    auto x = solve(basis_, flattened_columns);
    if (!x) throw InternalError("coordinates: map does not satisfy the intertwiner system");
    return *x;
}

std::size_t hom_dim(const LineQuiver& q, const QuiverModule& m, const QuiverModule& n) {
    return QuiverHom(q, m, n).dim();
}

DimVector top(const LineQuiver& q, const MaterializedRep& r) {
    DimVector d{r.dims.dims};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        d.dims[v] -= static_cast<std::int64_t>(rank(incoming(q, r, v)));
    }
    return d;
}

DimVector socle(const LineQuiver& q, const MaterializedRep& r) {
    DimVector d{r.dims.dims};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        d.dims[v] -= static_cast<std::int64_t>(rank(outgoing(q, r, v)));
    }
    return d;
}

namespace {

struct Piece {
    Interval interval;
    QuiverMap map;
};

std::vector<Piece> sorted_pieces(std::vector<Piece> pieces) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return canonical_before(a.interval, b.interval); });
    return pieces;
}

}  // namespace

namespace {

QuiverPresentation assemble_cover(const LineQuiver& q, const QuiverModule& m, const MaterializedRep& rep,
                                  std::vector<Piece> pieces) {
    const std::size_t n = q.vertex_count();
    pieces = sorted_pieces(std::move(pieces));
    std::vector<Interval> parts;
    for (const auto& p : pieces) parts.push_back(p.interval);
    QuiverPresentation out{QuiverModule(n, parts), m, {}};
    for (std::size_t w = 0; w < n; ++w) {
        ExactMatrix comp(q.field(), dim_at(rep, w), 0);
        for (const auto& p : pieces) {
            if (p.interval.contains(w)) comp = hstack(comp, p.map[w]);
        }
        if (rank(comp) != dim_at(rep, w)) throw InternalError("projective cover map is not onto");
        out.components.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

QuiverPresentation canonical_presentation(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    const std::size_t n = q.vertex_count();
    const MaterializedRep rep = materialize(q, m);
    std::vector<Piece> pieces;
    for (std::size_t v = 0; v < n; ++v) {
        const Interval pv = projective(q, v);
        QuiverHom h(q, QuiverModule::indecomposable(n, pv), m);
        for (const auto& f : h.basis()) pieces.push_back({pv, f});
    }
    return assemble_cover(q, m, rep, std::move(pieces));
}

QuiverPresentation projective_cover(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    const std::size_t n = q.vertex_count();
    const MaterializedRep rep = materialize(q, m);
    std::vector<Piece> pieces;
    for (std::size_t v = 0; v < n; ++v) {
        if (dim_at(rep, v) == 0) continue;
        ExactMatrix span = incoming(q, rep, v);
        std::size_t r = rank(span);
        const Interval pv = projective(q, v);
        QuiverHom h(q, QuiverModule::indecomposable(n, pv), m);
        for (const auto& f : h.basis()) {
            // Hom(P(v), M) is evaluated at the generator of P(v) at v.
            ExactMatrix candidate = hstack(span, f[v]);
            const std::size_t cr = rank(candidate);
            if (cr > r) {
                span = std::move(candidate);
                r = cr;
                pieces.push_back({pv, f});
            }
        }
        if (r != dim_at(rep, v)) throw InternalError("projective_cover: top not exhausted at a vertex");
    }
    return assemble_cover(q, m, rep, std::move(pieces));
}

QuiverEmbedding injective_envelope(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    const std::size_t n = q.vertex_count();
    const MaterializedRep rep = materialize(q, m);
    std::vector<Piece> pieces;
    for (std::size_t v = 0; v < n; ++v) {
        if (dim_at(rep, v) == 0) continue;
        const ExactMatrix soc = kernel(outgoing(q, rep, v));
        if (soc.cols() == 0) continue;
        ExactMatrix chosen(q.field(), 0, soc.cols());
        std::size_t r = 0;
        const Interval iv = injective(q, v);
        QuiverHom h(q, m, QuiverModule::indecomposable(n, iv));
        for (const auto& f : h.basis()) {
            // The functional f[v] restricted to the socle at v.
            ExactMatrix candidate = vstack(chosen, f[v] * soc);
            const std::size_t cr = rank(candidate);
            if (cr > r) {
                chosen = std::move(candidate);
                r = cr;
                pieces.push_back({iv, f});
            }
        }
        if (r != soc.cols()) throw InternalError("injective_envelope: socle not separated at a vertex");
    }
    pieces = sorted_pieces(std::move(pieces));
    std::vector<Interval> parts;
    for (const auto& p : pieces) parts.push_back(p.interval);
    QuiverEmbedding out{m, QuiverModule(n, parts), {}};
    for (std::size_t w = 0; w < n; ++w) {
        ExactMatrix comp(q.field(), 0, dim_at(rep, w));
        for (const auto& p : pieces) {
            if (p.interval.contains(w)) comp = vstack(comp, p.map[w]);
        }
        if (rank(comp) != dim_at(rep, w)) throw InternalError("injective_envelope: map is not injective");
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::int64_t euler_form(const LineQuiver& q, const DimVector& d, const DimVector& e) {
    if (d.dims.size() != q.vertex_count() || e.dims.size() != q.vertex_count()) {
        throw ContractError("euler_form: dimension vectors of the wrong length");
    }
    std::int64_t s = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) s += d.dims[v] * e.dims[v];
    for (std::size_t a = 0; a < q.arrow_count(); ++a) s -= d.dims[q.arrow_source(a)] * e.dims[q.arrow_target(a)];
    return s;
}

std::size_t ext1_dim(const LineQuiver& q, const QuiverModule& m, const QuiverModule& n) {
    if (m.is_zero() || n.is_zero()) return 0;
    const auto h = static_cast<std::int64_t>(hom_dim(q, m, n));
    const std::int64_t e = h - euler_form(q, m.dim_vector(), n.dim_vector());
    if (e < 0) throw InternalError("ext1_dim: negative dimension");
    return static_cast<std::size_t>(e);
}

ExactMatrix cartan_matrix(const LineQuiver& q) {
    const std::size_t n = q.vertex_count();
    ExactMatrix c(Coefficients::integers(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Interval p = projective(q, i);
        for (std::size_t j = p.lo; j <= p.hi; ++j) c.set(j, i, 1);
    }
    return c;
}

ExactMatrix coxeter_matrix(const LineQuiver& q) {
    const ExactMatrix c = cartan_matrix(q);
    const std::size_t n = q.vertex_count();
    auto inv = solve(c, ExactMatrix::identity(Coefficients::integers(), n));
    if (!inv) throw InternalError("coxeter_matrix: Cartan matrix not invertible");
    ExactMatrix phi = c.transposed() * *inv;
    return ExactMatrix(Coefficients::integers(), n, n) - phi;
}

std::optional<Interval> tau(const LineQuiver& q, const Interval& m) {
    const std::size_t n = q.vertex_count();
    if (m.hi >= n) throw ContractError("tau: interval outside the quiver");
    for (std::size_t v = 0; v < n; ++v)
        if (projective(q, v) == m) return std::nullopt;
    ExactMatrix d(Coefficients::integers(), n, 1);
    for (std::size_t v = m.lo; v <= m.hi; ++v) d.set(v, 0, 1);
    const ExactMatrix t = coxeter_matrix(q) * d;
    std::size_t lo = n, hi = 0, ones = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (t(v, 0) == 1) {
            lo = std::min(lo, v);
            hi = v;
            ++ones;
        } else if (t(v, 0) != 0) {
            throw InternalError("tau: translate is not an interval");
        }
    }
    if (ones == 0 || hi - lo + 1 != ones) throw InternalError("tau: translate is not an interval");
    return Interval{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

QuiverModule tau(const LineQuiver& q, const QuiverModule& m) {
    require_quiver(q, m);
    std::vector<Interval> parts;
    for (const auto& i : m.parts()) {
        if (auto t = tau(q, i)) parts.push_back(*t);
    }
    return QuiverModule(q.vertex_count(), std::move(parts));
}

bool is_tilting(const LineQuiver& q, const QuiverModule& t) {
    require_quiver(q, t);
    if (t.is_zero()) return false;
    std::vector<Interval> distinct;
    for (const auto& i : t.parts())
        if (std::find(distinct.begin(), distinct.end(), i) == distinct.end()) distinct.push_back(i);
    if (distinct.size() != q.vertex_count()) return false;
    return ext1_dim(q, t, t) == 0;
}

bool is_generated_by(const LineQuiver& q, const QuiverModule& t, const QuiverModule& n) {
    require_quiver(q, t);
    require_quiver(q, n);
    if (n.is_zero()) return true;
    if (t.is_zero()) return false;
    QuiverHom h(q, t, n);
    const MaterializedRep& rep = h.target_rep();
    for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        ExactMatrix trace(q.field(), dim_at(rep, w), 0);
        for (const auto& f : h.basis()) trace = hstack(trace, f[w]);
        if (rank(trace) != dim_at(rep, w)) return false;
    }
    return true;
}

bool is_cogenerated_by(const LineQuiver& q, const QuiverModule& t, const QuiverModule& n) {
    require_quiver(q, t);
    require_quiver(q, n);
    if (n.is_zero()) return true;
    if (t.is_zero()) return false;
    QuiverHom h(q, n, t);
    const MaterializedRep& rep = h.source_rep();
    for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        ExactMatrix reject(q.field(), 0, dim_at(rep, w));
        for (const auto& f : h.basis()) reject = vstack(reject, f[w]);
        if (rank(reject) != dim_at(rep, w)) return false;
    }
    return true;
}

namespace {

ExactMatrix coordinates_of(const LineQuiver& q, const QuiverHom& into, const std::vector<QuiverMap>& maps) {
    if (maps.empty() || into.dim() == 0) return ExactMatrix(q.field(), into.dim(), maps.size());
    ExactMatrix cols = into.flatten(maps.front());
    for (std::size_t k = 1; k < maps.size(); ++k) cols = hstack(cols, into.flatten(maps[k]));
    return into.coordinates(cols);
}

}  // namespace

ExactMatrix postcomposition_matrix(const LineQuiver& q, const QuiverModule& m, const QuiverPresentation& g) {
    QuiverHom to_cover(q, m, g.cover);
    QuiverHom to_target(q, m, g.target);
    std::vector<QuiverMap> composed;
    for (const auto& h : to_cover.basis()) {
        QuiverMap c;
        for (std::size_t w = 0; w < q.vertex_count(); ++w) c.push_back(g.components[w] * h[w]);
        composed.push_back(std::move(c));
    }
    return coordinates_of(q, to_target, composed);
}

ExactMatrix restriction_matrix(const LineQuiver& q, const QuiverModule& m, const QuiverEmbedding& e) {
    QuiverHom from_envelope(q, e.envelope, m);
    QuiverHom from_source(q, e.source, m);
    std::vector<QuiverMap> composed;
    for (const auto& f : from_envelope.basis()) {
        QuiverMap c;
        for (std::size_t w = 0; w < q.vertex_count(); ++w) c.push_back(f[w] * e.components[w]);
        composed.push_back(std::move(c));
    }
    return coordinates_of(q, from_source, composed);
}

}  // namespace profilium
