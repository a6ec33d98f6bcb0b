#include "causalbench/inference.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace causalbench {

namespace {

using u128 = unsigned __int128;
using i64 = std::int64_t;

void check_event(const Scm& scm, const Event& event, const char* what) {
    std::set<NodeId> seen;
    for (const auto& term : event) {
        if (term.var >= scm.dag.node_count)
            fail(ErrorCode::unknown_node, std::string(what) + " references unknown variable");
        if (!seen.insert(term.var).second)
            fail(ErrorCode::precondition, std::string(what) + " repeats a variable");
        if (term.allowed.empty())
            fail(ErrorCode::precondition, std::string(what) + " has an empty value set");
        for (int v : term.allowed)
            if (v < 0 || static_cast<std::size_t>(v) >= scm.domain_size(term.var))
                fail(ErrorCode::precondition, std::string(what) + " value outside the domain");
    }
}

// Candidate values per node after applying event and clamp restrictions.
std::vector<std::vector<int>> allowed_values(const Scm& scm, const Event& event,
                                             const Assignment* clamps = nullptr) {
    std::vector<std::vector<int>> allowed(scm.dag.node_count);
    for (NodeId v = 0; v < scm.dag.node_count; ++v) {
        allowed[v].resize(scm.domain_size(v));
        for (std::size_t k = 0; k < allowed[v].size(); ++k) allowed[v][k] = static_cast<int>(k);
    }
    for (const auto& term : event) {
        std::vector<int> vals = term.allowed;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        allowed[term.var] = std::move(vals);
    }
    if (clamps)
        for (NodeId v = 0; v < scm.dag.node_count; ++v)
            if (clamps->has(v)) allowed[v] = {clamps->get(v)};
    return allowed;
}

// Visits every world consistent with `allowed`, in lexicographic order.
template <class F>
void for_each_world(const std::vector<std::vector<int>>& allowed, F&& fn) {
    const std::size_t n = allowed.size();
    std::vector<std::size_t> idx(n, 0);
    std::vector<int> world(n);
    for (std::size_t v = 0; v < n; ++v) world[v] = allowed[v][0];
    while (true) {
        fn(world);
        std::size_t v = n;
        while (v-- > 0) {
            if (++idx[v] < allowed[v].size()) {
                world[v] = allowed[v][idx[v]];
                break;
            }
            idx[v] = 0;
            world[v] = allowed[v][0];
            if (v == 0) return;
        }
    }
}

bool satisfies(const Event& event, const std::vector<int>& world) {
    for (const auto& term : event) {
        bool ok = false;
        for (int v : term.allowed)
            if (world[term.var] == v) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact permille view. CPT entries that are integer thousandths are evaluated
// with 128-bit integers; equal rationals then convert to equal doubles.
// ---------------------------------------------------------------------------

struct PermilleView {
    bool graded = false;
    // permille[v][row][value], and prefix[v][row][value] = inclusive prefix sum
    std::vector<std::vector<std::vector<i64>>> permille;
    std::vector<std::vector<std::vector<i64>>> prefix;
};

PermilleView make_permille_view(const Scm& scm) {
    PermilleView view;
    view.graded = true;
    view.permille.resize(scm.cpts.size());
    view.prefix.resize(scm.cpts.size());
    for (std::size_t v = 0; v < scm.cpts.size() && view.graded; ++v) {
        const Cpt& cpt = scm.cpts[v];
        view.permille[v].resize(cpt.row_count());
        view.prefix[v].resize(cpt.row_count());
        for (std::size_t r = 0; r < cpt.row_count() && view.graded; ++r) {
            i64 running = 0;
            for (double p : cpt.rows[r]) {
                i64 k = std::llround(p * 1000.0);
                if (k < 0 || k > 1000 || static_cast<double>(k) / 1000.0 != p) {
                    view.graded = false;
                    break;
                }
                view.permille[v][r].push_back(k);
                running += k;
                view.prefix[v][r].push_back(running);
            }
            if (view.graded && running != 1000) view.graded = false;
        }
    }
    return view;
}

std::size_t row_of(const Cpt& cpt, const std::vector<int>& world) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < cpt.parents.size(); ++i)
        idx = idx * cpt.parent_cards[i] + static_cast<std::size_t>(world[cpt.parents[i]]);
    return idx;
}

struct ExactRatio {
    u128 num = 0;
    u128 den = 0;
};

double conditional_exact(const Scm& scm, const PermilleView& view, const Event& target,
                         const std::vector<std::vector<int>>& allowed, const Assignment* skip) {
    u128 num = 0, den = 0;
    for_each_world(allowed, [&](const std::vector<int>& world) {
        u128 w = 1;
        for (NodeId v = 0; v < scm.dag.node_count; ++v) {
            if (skip && skip->has(v)) continue;  // intervened factor drops out
            w *= static_cast<u128>(view.permille[v][row_of(scm.cpts[v], world)]
                                                 [static_cast<std::size_t>(world[v])]);
            if (w == 0) break;
        }
        den += w;
        if (satisfies(target, world)) num += w;
    });
    if (den == 0) fail(ErrorCode::zero_evidence, "conditioning event has probability 0");
    return detail::ratio_to_double(num, den);
}

double conditional_double(const Scm& scm, const Event& target,
                          const std::vector<std::vector<int>>& allowed, const Assignment* skip) {
    double num = 0.0, den = 0.0;
    for_each_world(allowed, [&](const std::vector<int>& world) {
        double w = 1.0;
        for (NodeId v = 0; v < scm.dag.node_count; ++v) {
            if (skip && skip->has(v)) continue;
            w *= scm.cpts[v].rows[row_of(scm.cpts[v], world)][static_cast<std::size_t>(world[v])];
        }
        den += w;
        if (satisfies(target, world)) num += w;
    });
    if (den == 0.0) fail(ErrorCode::zero_evidence, "conditioning event has probability 0");
    return num / den;
}

double conditional(const Scm& scm, const Event& target, const Event& evidence,
                   const Assignment* clamps) {
    PermilleView view = make_permille_view(scm);
    auto allowed = allowed_values(scm, evidence, clamps);
    if (view.graded) return conditional_exact(scm, view, target, allowed, clamps);
    return conditional_double(scm, target, allowed, clamps);
}

}  // namespace

Event event_of(std::initializer_list<std::pair<NodeId, int>> pairs) {
    Event event;
    for (const auto& [var, value] : pairs) event.push_back({var, {value}});
    return event;
}

bool event_allows(const Event& event, const Assignment& world) {
    for (const auto& term : event) {
        if (!world.has(term.var)) return false;
        if (std::find(term.allowed.begin(), term.allowed.end(), world.get(term.var)) ==
            term.allowed.end())
            return false;
    }
    return true;
}

double joint_probability(const Scm& scm, const Assignment& world) {
    for (NodeId v = 0; v < scm.dag.node_count; ++v)
        if (!world.has(v))
            fail(ErrorCode::incomplete_world,
                 "world does not assign variable " + std::to_string(v));
    PermilleView view = make_permille_view(scm);
    std::vector<int> values(scm.dag.node_count);
    for (NodeId v = 0; v < scm.dag.node_count; ++v) values[v] = world.get(v);
    if (view.graded) {
        u128 num = 1, den = 1;
        for (NodeId v = 0; v < scm.dag.node_count; ++v) {
            num *= static_cast<u128>(view.permille[v][row_of(scm.cpts[v], values)]
                                                   [static_cast<std::size_t>(values[v])]);
            den *= 1000;
        }
        return detail::ratio_to_double(num, den);
    }
    double p = 1.0;
    for (NodeId v = 0; v < scm.dag.node_count; ++v)
        p *= scm.cpts[v].rows[row_of(scm.cpts[v], values)][static_cast<std::size_t>(values[v])];
    return p;
}

double query_probability(const Scm& scm, const Event& target, const Event& evidence) {
    check_event(scm, target, "target");
    check_event(scm, evidence, "evidence");
    return conditional(scm, target, evidence, nullptr);
}

double interventional_probability(const Scm& scm, const Event& target, const Assignment& do_set,
                                  const Event& evidence) {
    check_event(scm, target, "target");
    check_event(scm, evidence, "evidence");
    if (do_set.empty())
        fail(ErrorCode::precondition, "do-set is empty; use query_probability instead");
    for (const auto& term : evidence)
        if (do_set.has(term.var))
            fail(ErrorCode::precondition, "evidence overlaps intervened variables");
    for (NodeId v = 0; v < scm.dag.node_count; ++v)
        if (do_set.has(v) &&
            (do_set.get(v) < 0 || static_cast<std::size_t>(do_set.get(v)) >= scm.domain_size(v)))
            fail(ErrorCode::precondition, "intervention value outside the domain");
    return conditional(scm, target, evidence, &do_set);
}

double counterfactual_probability(const Scm& scm, const Event& factual_evidence,
                                  const Assignment& interventions, const Event& target) {
    check_event(scm, factual_evidence, "factual evidence");
    check_event(scm, target, "target");
    const NodeId n = scm.dag.node_count;
    for (NodeId v = 0; v < n; ++v)
        if (interventions.has(v) && (interventions.get(v) < 0 ||
                                     static_cast<std::size_t>(interventions.get(v)) >=
                                         scm.domain_size(v)))
            fail(ErrorCode::precondition, "intervention value outside the domain");

    PermilleView view = make_permille_view(scm);
    auto allowed_f = allowed_values(scm, factual_evidence, nullptr);
    auto allowed_cf = allowed_values(scm, {}, &interventions);

    if (view.graded) {
        // Shared exogenous noise: for each node, the mass of U values mapping
        // the factual row to v_f and the counterfactual row to v_cf is the
        // overlap of the two inverse-CDF intervals, an exact integer.
        u128 num = 0, den = 0;
        for_each_world(allowed_f, [&](const std::vector<int>& wf) {
            u128 pf = 1;
            std::vector<std::size_t> row_f(n);
            for (NodeId v = 0; v < n; ++v) {
                row_f[v] = row_of(scm.cpts[v], wf);
                pf *= static_cast<u128>(
                    view.permille[v][row_f[v]][static_cast<std::size_t>(wf[v])]);
                if (pf == 0) break;
            }
            if (pf == 0) return;
            den += pf;
            for_each_world(allowed_cf, [&](const std::vector<int>& wc) {
                if (!satisfies(target, wc)) return;
                u128 mass = 1;
                for (NodeId v = 0; v < n && mass != 0; ++v) {
                    if (interventions.has(v)) {
                        // clamped node: only the factual branch constrains U
                        mass *= static_cast<u128>(
                            view.permille[v][row_f[v]][static_cast<std::size_t>(wf[v])]);
                        continue;
                    }
                    const auto& pre = view.prefix[v];
                    std::size_t rc = row_of(scm.cpts[v], wc);
                    auto vf = static_cast<std::size_t>(wf[v]);
                    auto vc = static_cast<std::size_t>(wc[v]);
                    i64 lo_f = vf == 0 ? 0 : pre[row_f[v]][vf - 1];
                    i64 hi_f = pre[row_f[v]][vf];
                    i64 lo_c = vc == 0 ? 0 : pre[rc][vc - 1];
                    i64 hi_c = pre[rc][vc];
                    i64 overlap = std::min(hi_f, hi_c) - std::max(lo_f, lo_c);
                    mass = overlap > 0 ? mass * static_cast<u128>(overlap) : 0;
                }
                num += mass;
            });
        });
        if (den == 0) fail(ErrorCode::zero_evidence, "factual evidence has probability 0");
        return detail::ratio_to_double(num, den);
    }

    CanonicalScm canon = compile_canonical(scm);
    double num = 0.0, den = 0.0;
    for_each_world(allowed_f, [&](const std::vector<int>& wf) {
        double pf = 1.0;
        std::vector<std::size_t> row_f(n);
        for (NodeId v = 0; v < n; ++v) {
            row_f[v] = row_of(scm.cpts[v], wf);
            pf *= scm.cpts[v].rows[row_f[v]][static_cast<std::size_t>(wf[v])];
        }
        if (pf == 0.0) return;
        den += pf;
        for_each_world(allowed_cf, [&](const std::vector<int>& wc) {
            if (!satisfies(target, wc)) return;
            double mass = 1.0;
            for (NodeId v = 0; v < n && mass != 0.0; ++v) {
                const CanonicalNode& node = canon.nodes[v];
                if (interventions.has(v)) {
                    mass *= node.interval_hi(row_f[v], wf[v]) - node.interval_lo(row_f[v], wf[v]);
                    continue;
                }
                std::size_t rc = row_of(scm.cpts[v], wc);
                double lo = std::max(node.interval_lo(row_f[v], wf[v]),
                                     node.interval_lo(rc, wc[v]));
                double hi = std::min(node.interval_hi(row_f[v], wf[v]),
                                     node.interval_hi(rc, wc[v]));
                mass = hi > lo ? mass * (hi - lo) : 0.0;
            }
            num += mass;
        });
    });
    if (den == 0.0) fail(ErrorCode::zero_evidence, "factual evidence has probability 0");
    return num / den;
}

double probability_of_necessity(const Scm& scm, NodeId cause, NodeId outcome,
                                const Event& factual_evidence) {
    if (cause >= scm.dag.node_count || outcome >= scm.dag.node_count)
        fail(ErrorCode::unknown_node, "cause or outcome outside the model");
    if (scm.domain_size(cause) != 2 || scm.domain_size(outcome) != 2)
        fail(ErrorCode::non_binary, "probability of necessity needs binary cause and outcome");
    auto entails_one = [&](NodeId var) {
        for (const auto& term : factual_evidence)
            if (term.var == var) return term.allowed == std::vector<int>{1};
        return false;
    };
    if (!entails_one(cause) || !entails_one(outcome))
        fail(ErrorCode::precondition, "evidence must entail cause=1 and outcome=1");
    Assignment do_zero;
    do_zero.set(cause, 0);
    return counterfactual_probability(scm, factual_evidence, do_zero, Event{{outcome, {0}}});
}

Answer answer_query(const Scm& scm, const Query& query) {
    double p = 0.0;
    switch (query.kind) {
        case QueryKind::observational:
            p = query_probability(scm, query.target, query.evidence);
            break;
        case QueryKind::interventional:
            p = interventional_probability(scm, query.target, query.interventions, query.evidence);
            break;
        case QueryKind::counterfactual:
            p = counterfactual_probability(scm, query.evidence, query.interventions, query.target);
            break;
        case QueryKind::attributional: {
            if (!query.has_cause)
                fail(ErrorCode::precondition, "attributional query without a cause variable");
            if (query.target.size() != 1 || query.target[0].allowed != std::vector<int>{1})
                fail(ErrorCode::precondition, "attributional target must pin the outcome to 1");
            p = probability_of_necessity(scm, query.cause, query.target[0].var, query.evidence);
            break;
        }
    }
    Answer answer;
    answer.value = p;
    if (query.boolean_form) {
        answer.kind = Answer::Kind::boolean;
        answer.flag = p >= query.threshold;
    }
    return answer;
}

std::string Answer::to_text() const {
    if (kind == Kind::boolean) return flag ? "yes" : "no";
    return format_probability(value);
}

std::string format_probability(double p) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p);
    return std::string(buf, end);
}

const char* to_string(QueryKind k) {
    switch (k) {
        case QueryKind::observational: return "observational";
        case QueryKind::interventional: return "interventional";
        case QueryKind::counterfactual: return "counterfactual";
        case QueryKind::attributional: return "attributional";
    }
    return "?";
}

QueryKind query_kind_from_string(const std::string& s) {
    if (s == "observational") return QueryKind::observational;
    if (s == "interventional") return QueryKind::interventional;
    if (s == "counterfactual") return QueryKind::counterfactual;
    if (s == "attributional") return QueryKind::attributional;
    fail(ErrorCode::parse_error, "unknown query kind: " + s);
}

namespace detail {

bool permille_graded(const Scm& scm) { return make_permille_view(scm).graded; }

double ratio_to_double(u128 num, u128 den) {
    if (den == 0) fail(ErrorCode::precondition, "ratio with zero denominator");
    if (num == 0) return 0.0;
    if (num == den) return 1.0;
    // Normalize so n/den lands in [1, 2), then long-divide 53 mantissa bits
    // and round to nearest even. num < den < 2^120 is guaranteed by callers.
    int exp = 0;
    u128 n = num;
    while (n < den) {
        n <<= 1;
        ++exp;
    }
    u128 rem = n - den;
    std::uint64_t mant = 1;
    for (int i = 0; i < 52; ++i) {
        rem <<= 1;
        mant <<= 1;
        if (rem >= den) {
            rem -= den;
            mant |= 1;
        }
    }
    rem <<= 1;
    bool round_bit = rem >= den;
    if (round_bit) rem -= den;
    bool sticky = rem != 0;
    if (round_bit && (sticky || (mant & 1))) {
        if (++mant == (1ULL << 53)) {
            mant >>= 1;
            --exp;
        }
    }
    return std::ldexp(static_cast<double>(mant), -52 - exp);
}

}  // namespace detail

}  // namespace causalbench
