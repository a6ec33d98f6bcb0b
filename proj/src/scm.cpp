#include "causalbench/scm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "causalbench/rng.hpp"

namespace causalbench {

VarDomain VarDomain::categorical(std::vector<std::string> values) {
    VarDomain d;
    d.kind = DomainKind::categorical;
    d.values = std::move(values);
    return d;
}

std::size_t Cpt::expected_rows() const {
    std::size_t n = 1;
    for (std::size_t c : parent_cards) n *= c;
    return n;
}

std::size_t Cpt::row_index(const std::vector<int>& parent_values) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < parents.size(); ++i)
        idx = idx * parent_cards[i] + static_cast<std::size_t>(parent_values[i]);
    return idx;
}

std::size_t Assignment::assigned_count() const {
    std::size_t n = 0;
    for (int v : values_)
        if (v >= 0) ++n;
    return n;
}

bool Assignment::empty() const { return assigned_count() == 0; }

namespace {

// Probability value from an integer count of thousandths. All generated
// parameters pass through this so that text rendering and parsing agree
// bit-for-bit with the stored CPT.
double from_permille(long long k) { return static_cast<double>(k) / 1000.0; }

int draw_grid_permille(Rng& rng, const MechanismConfig& cfg) {
    int steps = (cfg.max_permille - cfg.min_permille) / cfg.grid_permille + 1;
    return cfg.min_permille + cfg.grid_permille * static_cast<int>(rng.below(steps));
}

int apply_separation(int k, Rng& rng, const MechanismConfig& cfg) {
    int sep = cfg.min_separation_permille;
    if (sep <= 0 || std::abs(k - 500) >= sep) return k;
    if (k == 500) return rng.below(2) ? 500 + sep : 500 - sep;
    return k < 500 ? 500 - sep : 500 + sep;
}

std::vector<double> binary_row(int permille_of_one) {
    return {from_permille(1000 - permille_of_one), from_permille(permille_of_one)};
}

// Random probability vector summing exactly to 1000 permille, each entry at
// least min_each. Largest-remainder style allocation keeps it deterministic.
std::vector<int> random_simplex_permille(Rng& rng, std::size_t d, int min_each) {
    std::vector<long long> raw(d);
    long long total = 0;
    for (auto& r : raw) {
        r = 1 + static_cast<long long>(rng.below(1000));
        total += r;
    }
    long long rem = 1000 - static_cast<long long>(min_each) * static_cast<long long>(d);
    std::vector<int> out(d);
    long long prefix = 0, allocated = 0;
    for (std::size_t i = 0; i < d; ++i) {
        prefix += raw[i];
        long long upto = rem * prefix / total;
        out[i] = min_each + static_cast<int>(upto - allocated);
        allocated = upto;
    }
    return out;
}

int clamp_permille(long long k) {
    return static_cast<int>(std::min<long long>(990, std::max<long long>(10, k)));
}

}  // namespace

Scm sample_mechanisms(const Dag& dag, const std::vector<VariableMeta>& metas, std::uint64_t seed,
                      const MechanismConfig& config) {
    if (config.families.empty())
        fail(ErrorCode::config_error, "mechanism config has an empty rule-family set");
    if (metas.size() != dag.node_count)
        fail(ErrorCode::precondition, "metas must cover every node");
    if (config.grid_permille <= 0 || config.min_permille > config.max_permille)
        fail(ErrorCode::config_error, "invalid permille grid");

    Scm scm;
    scm.dag = dag;
    scm.metas = metas;
    scm.cpts.resize(dag.node_count);

    for (NodeId v = 0; v < dag.node_count; ++v) {
        Rng rng(derive_seed(seed, 0x5C00ULL + v));
        Cpt& cpt = scm.cpts[v];
        cpt.child = v;
        cpt.parents = dag.parents_of(v);
        for (NodeId p : cpt.parents) cpt.parent_cards.push_back(metas[p].domain.size());

        const std::size_t d = metas[v].domain.size();
        const std::size_t nrows = cpt.expected_rows();
        cpt.rows.resize(nrows);

        const bool binary = d == 2;
        if (binary && cpt.parents.size() >= 2) {
            RuleFamily family = config.families[rng.below(config.families.size())];
            std::vector<double> strength(cpt.parents.size());
            for (auto& s : strength) s = from_permille(draw_grid_permille(rng, config));
            double leak = from_permille(draw_grid_permille(rng, config));
            double full = from_permille(
                std::max(draw_grid_permille(rng, config), draw_grid_permille(rng, config)));

            std::vector<int> pv(cpt.parents.size(), 0);
            for (std::size_t r = 0; r < nrows; ++r) {
                double p1;
                if (family == RuleFamily::noisy_or) {
                    // Active parents independently try to switch the child on.
                    double off = 1.0 - leak;
                    for (std::size_t i = 0; i < pv.size(); ++i)
                        if (pv[i] > 0) off *= 1.0 - strength[i];
                    p1 = 1.0 - off;
                } else {
                    // Inactive parents independently suppress the child.
                    p1 = full;
                    for (std::size_t i = 0; i < pv.size(); ++i)
                        if (pv[i] == 0) p1 *= 1.0 - strength[i];
                }
                int k = clamp_permille(std::llround(p1 * 1000.0));
                k = apply_separation(k, rng, config);
                cpt.rows[r] = binary_row(k);
                // next parent tuple, last parent fastest
                for (std::size_t i = pv.size(); i-- > 0;) {
                    if (++pv[i] < static_cast<int>(cpt.parent_cards[i])) break;
                    pv[i] = 0;
                }
            }
        } else if (binary) {
            for (std::size_t r = 0; r < nrows; ++r)
                cpt.rows[r] = binary_row(apply_separation(draw_grid_permille(rng, config), rng, config));
        } else {
            for (std::size_t r = 0; r < nrows; ++r) {
                std::vector<int> permille = random_simplex_permille(rng, d, 50);
                std::vector<double> row(d);
                for (std::size_t i = 0; i < d; ++i) row[i] = from_permille(permille[i]);
                cpt.rows[r] = std::move(row);
            }
        }
    }
    return scm;
}

std::vector<std::string> validate_scm(const Scm& scm) {
    std::vector<std::string> violations;
    auto complain = [&](const std::string& what) { violations.push_back(what); };

    if (!validate(scm.dag).empty()) complain("underlying graph is invalid");
    if (scm.metas.size() != scm.dag.node_count) complain("metas do not cover every node");
    if (scm.cpts.size() != scm.dag.node_count) complain("cpts do not cover every node");

    std::set<std::string> names;
    for (const auto& meta : scm.metas) {
        if (meta.domain.size() < 2) complain("variable '" + meta.name + "' has fewer than 2 values");
        std::set<std::string> labels(meta.domain.values.begin(), meta.domain.values.end());
        if (labels.size() != meta.domain.values.size())
            complain("variable '" + meta.name + "' has duplicate value labels");
        if (!names.insert(meta.name).second) complain("duplicate variable name '" + meta.name + "'");
    }
    if (scm.metas.size() != scm.dag.node_count || scm.cpts.size() != scm.dag.node_count)
        return violations;

    for (NodeId v = 0; v < scm.dag.node_count; ++v) {
        const Cpt& cpt = scm.cpts[v];
        std::string tag = "node " + std::to_string(v);
        if (cpt.child != v) complain(tag + ": cpt child mismatch");
        if (cpt.parents != scm.dag.parents_of(v)) complain(tag + ": cpt parents differ from graph");
        if (cpt.parent_cards.size() != cpt.parents.size()) {
            complain(tag + ": parent cardinality list mismatch");
            continue;
        }
        for (std::size_t i = 0; i < cpt.parents.size(); ++i)
            if (cpt.parent_cards[i] != scm.metas[cpt.parents[i]].domain.size())
                complain(tag + ": parent cardinality differs from parent domain");
        if (cpt.row_count() != cpt.expected_rows()) {
            complain(tag + ": incomplete table (" + std::to_string(cpt.row_count()) + " of " +
                     std::to_string(cpt.expected_rows()) + " rows)");
            continue;
        }
        const std::size_t d = scm.metas[v].domain.size();
        for (std::size_t r = 0; r < cpt.row_count(); ++r) {
            const auto& row = cpt.rows[r];
            if (row.size() != d) {
                complain(tag + " row " + std::to_string(r) + ": wrong width");
                continue;
            }
            double sum = 0.0;
            bool neg = false;
            for (double p : row) {
                sum += p;
                if (p < 0.0) neg = true;
            }
            if (neg) complain(tag + " row " + std::to_string(r) + ": negative probability");
            if (std::abs(sum - 1.0) > 1e-9)
                complain(tag + " row " + std::to_string(r) + ": non-normalized (sum=" +
                         std::to_string(sum) + ")");
        }
    }
    return violations;
}

Assignment sample_world(const Scm& scm, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x30BDULL));
    Assignment world(scm.dag.node_count);
    for (NodeId v : scm.dag.topo) {
        const Cpt& cpt = scm.cpts[v];
        std::vector<int> pv(cpt.parents.size());
        for (std::size_t i = 0; i < cpt.parents.size(); ++i) pv[i] = world.get(cpt.parents[i]);
        const auto& row = cpt.rows[cpt.row_index(pv)];
        double u = rng.real01();
        double cum = 0.0;
        int value = static_cast<int>(row.size()) - 1;
        for (std::size_t k = 0; k < row.size(); ++k) {
            cum += row[k];
            if (u < cum) {
                value = static_cast<int>(k);
                break;
            }
        }
        world.set(v, value);
    }
    return world;
}

int CanonicalNode::class_value(std::size_t k, std::size_t row) const {
    double lo = cuts[k];
    const auto& cdf = row_cdf[row];
    for (std::size_t v = 0; v < cdf.size(); ++v)
        if (cdf[v] > lo) return static_cast<int>(v);
    return static_cast<int>(cdf.size()) - 1;
}

double CanonicalNode::interval_lo(std::size_t row, int value) const {
    return value == 0 ? 0.0 : row_cdf[row][static_cast<std::size_t>(value) - 1];
}

double CanonicalNode::interval_hi(std::size_t row, int value) const {
    return row_cdf[row][static_cast<std::size_t>(value)];
}

CanonicalScm compile_canonical(const Scm& scm) {
    CanonicalScm canon;
    canon.nodes.resize(scm.dag.node_count);
    for (NodeId v = 0; v < scm.dag.node_count; ++v) {
        CanonicalNode& node = canon.nodes[v];
        const Cpt& cpt = scm.cpts[v];
        std::set<double> cut_set{0.0, 1.0};
        node.row_cdf.resize(cpt.row_count());
        for (std::size_t r = 0; r < cpt.row_count(); ++r) {
            auto& cdf = node.row_cdf[r];
            cdf.resize(cpt.rows[r].size());
            double cum = 0.0;
            for (std::size_t k = 0; k < cpt.rows[r].size(); ++k) {
                cum += cpt.rows[r][k];
                cdf[k] = std::min(cum, 1.0);
            }
            cdf.back() = 1.0;  // absorb the <=1e-9 normalization residue
            for (std::size_t k = 0; k + 1 < cdf.size(); ++k) cut_set.insert(cdf[k]);
        }
        node.cuts.assign(cut_set.begin(), cut_set.end());
    }
    return canon;
}

const char* to_string(Role r) {
    switch (r) {
        case Role::cause: return "cause";
        case Role::mediator: return "mediator";
        case Role::outcome: return "outcome";
        case Role::symptom: return "symptom";
        case Role::distractor: return "distractor";
        case Role::confounder: return "confounder";
    }
    return "?";
}

const char* to_string(Observability o) {
    return o == Observability::observed ? "observed" : "latent";
}

Role role_from_string(const std::string& s) {
    if (s == "cause") return Role::cause;
    if (s == "mediator") return Role::mediator;
    if (s == "outcome") return Role::outcome;
    if (s == "symptom") return Role::symptom;
    if (s == "distractor") return Role::distractor;
    if (s == "confounder") return Role::confounder;
    fail(ErrorCode::parse_error, "unknown role: " + s);
}

Observability observability_from_string(const std::string& s) {
    if (s == "observed") return Observability::observed;
    if (s == "latent") return Observability::latent;
    fail(ErrorCode::parse_error, "unknown observability: " + s);
}

}  // namespace causalbench
