#include "taut/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "taut/point_psi.hpp"
#include "taut/relations.hpp"

namespace taut {

namespace {

int parse_bound(std::string_view s, std::string_view whole) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad range '" + std::string(whole) + "'");
    }
    return v;
}

bool is_point_relation(std::string_view relation) {
    return relation == "conjC" || relation == "symmetry" || relation == "sreduce";
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_bound(text, text);
        return IntRange{v, v};
    }
    IntRange out{parse_bound(text.substr(0, dots), text), parse_bound(text.substr(dots + 2), text)};
    if (out.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return out;
}

std::string IntRange::str() const {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

const std::vector<std::string>& sweep_relations() {
    static const std::vector<std::string> names{"bbt",        "variation", "fqq",     "vyt",     "vpe",
                                                "xi-witness", "conjC",     "sreduce", "symmetry"};
    return names;
}

SweepConfig default_sweep(std::string_view relation, const SweepConfig& given) {
    SweepConfig c = given;
    auto fill = [](std::optional<IntRange>& slot, IntRange value) {
        if (!slot) slot = value;
    };
    if (relation == "bbt") {
        fill(c.genus, {1, 5});
        fill(c.r, {0, 3});
    } else if (relation == "variation") {
        fill(c.genus, {0, 3});
        fill(c.r, {0, 1});
    } else if (relation == "fqq") {
        fill(c.genus, {1, 4});
        fill(c.r, {0, 2});
    } else if (relation == "vyt") {
        fill(c.genus, {1, 4});
        fill(c.r, {1, 4});
    } else if (relation == "vpe") {
        fill(c.genus, {1, 3});
        fill(c.r, {1, 3});
    } else if (relation == "xi-witness") {
        fill(c.genus, {2, 5});
        fill(c.r, {0, 3});
    } else if (is_point_relation(relation)) {
        fill(c.genus, {0, 4});
        fill(c.r, relation == "sreduce" ? IntRange{1, 3} : IntRange{0, 3});
        fill(c.s, {0, 3});
        fill(c.levels, {0, 6});
    } else {
        throw std::invalid_argument("unknown relation '" + std::string(relation) + "'");
    }
    return c;
}

DeskBounds desk_bounds(std::string_view relation) {
    if (is_point_relation(relation)) return DeskBounds{5, 4, 10};
    return DeskBounds{6, 0, 0};
}

std::optional<std::string> exceeds_desk_bounds(std::string_view relation, const SweepConfig& c) {
    const auto bounds = desk_bounds(relation);
    if (c.genus && c.genus->hi > bounds.max_genus) {
        return "genus " + std::to_string(c.genus->hi) + " exceeds the desk-scale bound " +
               std::to_string(bounds.max_genus);
    }
    if (is_point_relation(relation)) {
        for (const auto& range : {c.r, c.s}) {
            if (range && range->hi > bounds.max_fields) {
                return "field count " + std::to_string(range->hi) + " exceeds the desk-scale bound " +
                       std::to_string(bounds.max_fields);
            }
        }
        if (c.levels && c.levels->hi > bounds.max_level) {
            return "level " + std::to_string(c.levels->hi) + " exceeds the desk-scale bound " +
                   std::to_string(bounds.max_level);
        }
    } else if (c.r && c.r->hi > 2 * bounds.max_genus) {
        return "r " + std::to_string(c.r->hi) + " exceeds the desk-scale bound " + std::to_string(2 * bounds.max_genus);
    }
    return std::nullopt;
}

std::vector<std::vector<int>> level_multisets(int length, IntRange levels) {
    std::vector<std::vector<int>> out;
    if (length < 0 || (length > 0 && levels.empty())) return out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(current.size()) == length) {
            out.push_back(current);
            return;
        }
        for (int l = from; l <= levels.hi; ++l) {
            current.push_back(l);
            self(self, l);
            current.pop_back();
        }
    };
    rec(rec, levels.lo);
    return out;
}

namespace {

using Params = std::vector<std::pair<std::string, ParamValue>>;

std::vector<VectorFieldPt> coordinates(const std::vector<int>& levels) {
    std::vector<VectorFieldPt> out;
    for (int l : levels) out.push_back(VectorFieldPt::coordinate(l));
    return out;
}

Params field_params(int g, int r, int s, int m, const std::vector<VectorFieldPt>& w,
                    const std::vector<VectorFieldPt>& v) {
    return {{"g", g}, {"r", r}, {"s", s}, {"m", m}, {"W", render_fields(w)}, {"V", render_fields(v)}};
}

void point_sweep(CorrelatorEngine& engine, std::string_view relation, const SweepConfig& c,
                 std::vector<VerificationReport>& out) {
    const bool reduce = relation == "sreduce";
    for (int g = std::max(0, c.genus->lo); g <= c.genus->hi; ++g) {
        for (int r = std::max(reduce ? 1 : 0, c.r->lo); r <= c.r->hi; ++r) {
            for (int s = std::max(0, c.s->lo); s <= c.s->hi; ++s) {
                int m_lo = std::max({reduce ? 1 : 0, conj_threshold(g, r, s)});
                int m_hi = 3 * g + 3;
                if (c.m) {
                    m_lo = std::max(m_lo, c.m->lo);
                    m_hi = c.m->hi;
                }
                if (m_lo > m_hi) continue;
                const auto w_sets = level_multisets(reduce ? r - 1 : r, *c.levels);
                const auto v_sets = level_multisets(s, *c.levels);
                for (int m = m_lo; m <= m_hi; ++m) {
                    for (const auto& wl : w_sets) {
                        const auto w = coordinates(wl);
                        for (const auto& vl : v_sets) {
                            const auto v = coordinates(vl);
                            if (relation == "conjC") {
                                out.push_back(verify_conjC(engine, g, m, w, v));
                                continue;
                            }
                            Stopwatch clock;
                            VerificationReport report;
                            report.relation = std::string(relation);
                            report.params = field_params(g, r, s, m, w, v);
                            if (reduce) {
                                const auto check = sreduce_check(engine, g, m, w, v);
                                report.tests = {{"Psi(W,S|V)", check.lhs}, {"-Psi_m-1(W|V)+sum Psi(tau-(W_i))", check.rhs}};
                                report.pass = check.pass;
                            } else {
                                const auto check = symmetry_check(engine, g, m, w, v);
                                report.tests = {{"Psi(W|V)", check.lhs}, {"(-1)^m Psi(V|W)", check.rhs}};
                                report.pass = check.pass;
                            }
                            report.millis = clock.millis();
                            out.push_back(std::move(report));
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<VerificationReport> run_sweep(CorrelatorEngine& engine, std::string_view relation,
                                          const SweepConfig& config) {
    const SweepConfig c = default_sweep(relation, config);
    std::vector<VerificationReport> out;
    const IntRange g = *c.genus;

    if (is_point_relation(relation)) {
        point_sweep(engine, relation, c, out);
    } else if (relation == "bbt") {
        for (int genus = std::max(1, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(0, c.r->lo); r <= c.r->hi; ++r) {
                out.push_back(verify(engine, build_bbt(genus, r), "bbt", {{"g", genus}, {"r", r}}));
            }
        }
    } else if (relation == "variation") {
        for (int genus = std::max(0, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(0, c.r->lo); r <= c.r->hi; ++r) {
                out.push_back(verify(engine, build_variation(genus, c.n1, c.n2, r), "variation",
                                     {{"g", genus}, {"n1", c.n1}, {"n2", c.n2}, {"r", r}}));
            }
        }
    } else if (relation == "fqq") {
        for (int genus = std::max(1, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(0, c.r->lo); r <= c.r->hi; ++r) {
                out.push_back(verify(engine, build_fqq(genus, r), "fqq", {{"g", genus}, {"r", r}}));
            }
        }
    } else if (relation == "vyt") {
        for (int genus = std::max(1, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(1, c.r->lo); r <= c.r->hi; ++r) out.push_back(verify_vyt(engine, genus, r));
        }
    } else if (relation == "vpe") {
        for (int genus = std::max(1, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(1, c.r->lo); r <= c.r->hi; ++r) {
                if (r % 2 == 0) continue;
                out.push_back(verify(engine, build_vpe(genus, r), "vpe", {{"g", genus}, {"r", r}}));
            }
        }
    } else if (relation == "xi-witness") {
        for (int genus = std::max(2, g.lo); genus <= g.hi; ++genus) {
            for (int r = std::max(0, c.r->lo); r <= std::min(c.r->hi, genus - 2); ++r) {
                out.push_back(verify_xi_witness(engine, genus, r));
            }
        }
    }
    if (out.empty()) throw std::invalid_argument("empty sweep for relation '" + std::string(relation) + "'");
    return out;
}

}  // namespace taut
