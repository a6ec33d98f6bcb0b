#include "causalbench/textgen.hpp"

#include <fstream>
#include <sstream>

#include "causalbench/rng.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace causalbench;
using testfix::disease_scm;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool contains_text(const std::vector<Statement>& statements, const std::string& needle) {
    for (const auto& s : statements)
        if (s.text == needle) return true;
    return false;
}

}  // namespace

TEST_CASE("vocabulary files on disk match the built-in copies") {
    struct Case {
        ScenarioDomain domain;
        const char* file;
    } cases[] = {
        {ScenarioDomain::medicine, "/vocab/medicine.json"},
        {ScenarioDomain::education, "/vocab/education.json"},
        {ScenarioDomain::economics, "/vocab/economics.json"},
    };
    for (const auto& c : cases) {
        Vocabulary from_file =
            parse_vocabulary(slurp(std::string(CAUSALBENCH_DATA_DIR) + c.file));
        const Vocabulary& builtin = builtin_vocabulary(c.domain);
        CHECK(from_file.opener == builtin.opener);
        REQUIRE(from_file.entries.size() == builtin.entries.size());
        for (std::size_t i = 0; i < from_file.entries.size(); ++i) {
            CHECK(from_file.entries[i].label == builtin.entries[i].label);
            CHECK(from_file.entries[i].phrases == builtin.entries[i].phrases);
            CHECK(from_file.entries[i].rank == builtin.entries[i].rank);
        }
        CHECK(from_file.distractors.size() == builtin.distractors.size());
        CHECK(from_file.confounders.size() == builtin.confounders.size());
    }
}

TEST_CASE("ground_graph: medicine chain gets the canonical labels for any seed") {
    Dag chain = Dag::make(3, {{0, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto metas = ground_graph(chain, ScenarioDomain::medicine, seed);
        REQUIRE(metas.size() == 3);
        CHECK(metas[0].name == "infection");
        CHECK(metas[1].name == "medicine");
        CHECK(metas[2].name == "recovery");
        CHECK(metas[0].role == Role::cause);
        CHECK(metas[1].role == Role::mediator);
        CHECK(metas[2].role == Role::outcome);
    }
}

TEST_CASE("ground_graph: deterministic, injective, role-compatible") {
    for (auto domain :
         {ScenarioDomain::medicine, ScenarioDomain::education, ScenarioDomain::economics}) {
        Rng rng(9);
        for (int i = 0; i < 30; ++i) {
            Dag dag = sample_dag(rng.next(), 3 + static_cast<NodeId>(rng.below(5)), Motif::mixed);
            std::uint64_t seed = rng.next();
            auto a = ground_graph(dag, domain, seed);
            auto b = ground_graph(dag, domain, seed);
            std::set<std::string> names;
            for (std::size_t v = 0; v < a.size(); ++v) {
                CHECK(a[v].name == b[v].name);
                names.insert(a[v].name);
            }
            CHECK(names.size() == dag.node_count);  // injective
        }
    }
}

TEST_CASE("ground_graph: runs out of entries on a tiny vocabulary") {
    Vocabulary tiny;
    tiny.domain = ScenarioDomain::medicine;
    tiny.entries.push_back({"a", {Role::cause, Role::mediator, Role::outcome}, 0, {}, {}});
    tiny.entries.push_back({"b", {Role::cause, Role::mediator, Role::outcome}, 0, {}, {}});
    Dag chain = Dag::make(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(ground_graph(chain, tiny, 1), Error);
    try {
        ground_graph(chain, tiny, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::vocab_exhausted);
    }
}

TEST_CASE("render_background: reproduces the worked disease statements") {
    Scm scm = disease_scm();
    auto metas = scm.metas;
    auto statements = render_background(scm, metas);

    REQUIRE(statements.size() == 6);  // opener + prior + 2 + 2
    CHECK(statements[0].text == "There is a disease.");
    CHECK(statements[1].text == "Now we know that 10% people get infected.");
    CHECK(statements[2].text == "70% people will take medicine if they are infected.");
    CHECK(statements[3].text == "30% people will take medicine even if they are not infected.");
    CHECK(statements[4].text == "90% people will recover in three days if they take medicine.");
    CHECK(statements[5].text ==
          "40% people will recover in three days if they don't take medicine.");

    // rendering is pure
    auto again = render_background(scm, metas);
    for (std::size_t i = 0; i < statements.size(); ++i) CHECK(statements[i].text == again[i].text);
}

TEST_CASE("render_background: compositional fallback for unpinned structures") {
    Dag fork = Dag::make(3, {{0, 1}, {0, 2}});
    auto metas = ground_graph(fork, ScenarioDomain::medicine, 4);
    Scm scm = sample_mechanisms(fork, metas, 4);
    auto statements = render_background(scm, metas);
    // opener + 1 prior + 2 rows per child
    REQUIRE(statements.size() == 6);
    for (const auto& s : statements) CHECK_FALSE(s.text.empty());
}

TEST_CASE("format_percent: integer when exact, else one decimal") {
    CHECK(format_percent(0.9) == "90");
    CHECK(format_percent(0.345) == "34.5");
    CHECK(format_percent(0.05) == "5");
    CHECK(format_percent(1.0) == "100");
    CHECK(format_percent_permille(345) == "34.5");
}

TEST_CASE("parse_percent: inverse of format_percent on the permille grid") {
    for (long long permille = 0; permille <= 1000; ++permille) {
        double stored = static_cast<double>(permille) / 1000.0;
        CHECK(parse_percent(format_percent_permille(permille)) == stored);
    }
    CHECK_THROWS_AS(parse_percent("pear"), Error);
}

TEST_CASE("rendered numbers parse back to the exact CPT values") {
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        Dag dag = sample_dag(rng.next(), 3 + static_cast<NodeId>(rng.below(5)), Motif::mixed);
        auto metas = ground_graph(dag, ScenarioDomain::education, rng.next());
        Scm scm = sample_mechanisms(dag, metas, rng.next());
        auto statements = render_background(scm, metas);
        for (const auto& stmt : statements) {
            if (stmt.kind != StatementKind::prior && stmt.kind != StatementKind::conditional)
                continue;
            if (stmt.permille < 0) continue;  // categorical lists checked via text below
            // extract the number before the first '%'
            auto pct = stmt.text.find('%');
            REQUIRE(pct != std::string::npos);
            auto start = stmt.text.find_last_of(" \t", pct);
            std::string num = stmt.text.substr(start + 1, pct - start - 1);
            double parsed = parse_percent(num);
            CHECK(parsed ==
                  scm.cpts[stmt.node].rows[static_cast<std::size_t>(stmt.row)][1]);
        }
    }
}

TEST_CASE("render_question: families for all four kinds") {
    Scm scm = disease_scm();
    auto& metas = scm.metas;

    Query still;
    still.kind = QueryKind::observational;
    still.target = event_of({{0, 1}, {2, 0}});
    CHECK(render_question(still, metas) == "What's the ratio of people that are still infected?");

    Query obs;
    obs.kind = QueryKind::observational;
    obs.target = event_of({{2, 1}});
    CHECK(render_question(obs, metas) == "What is the chance that people recover?");

    Query iv;
    iv.kind = QueryKind::interventional;
    iv.target = event_of({{2, 1}});
    iv.interventions.set(1, 0);
    CHECK(render_question(iv, metas) ==
          "Suppose we make sure that people do not take medicine. What is the chance that people "
          "recover?");

    Query cf;
    cf.kind = QueryKind::counterfactual;
    cf.target = event_of({{2, 1}});
    cf.evidence = event_of({{0, 1}, {2, 1}});
    cf.interventions.set(0, 0);
    cf.boolean_form = true;
    CHECK(render_question(cf, metas) ==
          "We observed that people are infected and people recover. Had the infection not "
          "occurred, would recovery still be likely?");

    Query attr;
    attr.kind = QueryKind::attributional;
    attr.target = event_of({{2, 1}});
    attr.evidence = event_of({{1, 1}, {2, 1}});
    attr.cause = 1;
    attr.has_cause = true;
    std::string q = render_question(attr, metas);
    CHECK(q.find("What caused the recovery?") != std::string::npos);
    CHECK(q.find("had people not taken medicine") != std::string::npos);

    // unknown variable in target
    Query bad;
    bad.kind = QueryKind::observational;
    bad.target = event_of({{9, 1}});
    CHECK_THROWS_AS(render_question(bad, metas), Error);
}

TEST_CASE("render_question: variants differ but stay deterministic") {
    Scm scm = disease_scm();
    Query obs;
    obs.kind = QueryKind::observational;
    obs.target = event_of({{2, 1}});
    const Vocabulary& vocab = builtin_vocabulary(ScenarioDomain::medicine);
    std::string v0 = render_question(obs, scm.metas, vocab, 0);
    std::string v1 = render_question(obs, scm.metas, vocab, 1);
    CHECK(v0 != v1);
    CHECK(v0 == render_question(obs, scm.metas, vocab, 0));
    CHECK(v1 == render_question(obs, scm.metas, vocab, 1));
}

TEST_CASE("render_statement: unfillable template is a template error") {
    Scm scm = disease_scm();
    Vocabulary broken = builtin_vocabulary(ScenarioDomain::medicine);
    for (auto& entry : broken.entries)
        if (entry.label == "infection") entry.phrases["prior"] = "Broken {nope} slot.";
    CHECK_THROWS_AS(render_statement(scm, scm.metas, broken, 0, 0), Error);
    try {
        render_statement(scm, scm.metas, broken, 0, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::template_missing);
    }
}

TEST_CASE("categorical statements list the full distribution") {
    Scm scm;
    scm.dag = Dag::make(3, {{0, 1}, {1, 2}});
    scm.metas = {
        {0, "infection", VarDomain::binary(), Observability::observed, Role::cause, "medicine"},
        {1, "symptom severity", VarDomain::categorical({"mild", "moderate", "severe"}),
         Observability::observed, Role::mediator, "medicine"},
        {2, "recovery", VarDomain::binary(), Observability::observed, Role::outcome, "medicine"},
    };
    scm.cpts = {
        {0, {}, {}, {{0.9, 0.1}}},
        {1, {0}, {2}, {{0.5, 0.3, 0.2}, {0.2, 0.3, 0.5}}},
        {2, {1}, {3}, {{0.3, 0.7}, {0.5, 0.5}, {0.8, 0.2}}},
    };
    REQUIRE(validate_scm(scm).empty());
    auto statements = render_background(scm, scm.metas);
    CHECK(contains_text(statements,
                        "When they are infected, symptom severity is mild in 20% of cases, "
                        "moderate in 30% of cases, and severe in 50% of cases."));
    CHECK(contains_text(statements, "70% people will recover in three days if symptom severity "
                                    "is mild."));
}

TEST_CASE("capitalize") {
    CHECK(capitalize("infection") == "Infection");
    CHECK(capitalize("Already") == "Already");
    CHECK(capitalize("") == "");
}
