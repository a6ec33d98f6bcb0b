#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "causalbench/scm.hpp"

namespace causalbench {

/// One conjunct of an event: the variable must take a value from `allowed`.
struct EventTerm {
    NodeId var = 0;
    std::vector<int> allowed;  // sorted, unique, in-domain
    bool operator==(const EventTerm&) const = default;
};

/// Conjunction of terms over distinct variables. Empty event is "true".
using Event = std::vector<EventTerm>;

Event event_of(std::initializer_list<std::pair<NodeId, int>> pairs);
bool event_allows(const Event& event, const Assignment& world);

enum class QueryKind { observational, interventional, counterfactual, attributional };

struct Query {
    QueryKind kind = QueryKind::observational;
    Event target;
    Event evidence;
    Assignment interventions;  // nonempty only for interventional/counterfactual
    NodeId cause = 0;          // attributional only
    bool has_cause = false;
    bool boolean_form = false;  // surface question is yes/no
    double threshold = 0.5;

    bool operator==(const Query&) const = default;
};

struct Answer {
    enum class Kind { probability, boolean };
    Kind kind = Kind::probability;
    double value = 0.0;  // probability in both forms
    bool flag = false;   // value >= threshold, meaningful when kind == boolean

    /// Shortest decimal string that round-trips the double ("0.025", "yes"/"no").
    std::string to_text() const;

    bool operator==(const Answer&) const = default;
};

/// Probability of one complete world: the product of CPT entries in
/// topological order. Throws incomplete_world if any model variable is unset.
double joint_probability(const Scm& scm, const Assignment& world);

/// P(target | evidence) by exhaustive enumeration; evidence empty gives the
/// marginal. Throws zero_evidence when P(evidence) = 0.
double query_probability(const Scm& scm, const Event& target, const Event& evidence = {});

/// P(target | do(do_set), evidence) by graph surgery and truncated
/// factorization; evidence conditions the post-surgery distribution.
double interventional_probability(const Scm& scm, const Event& target, const Assignment& do_set,
                                  const Event& evidence = {});

/// Abduction-action-prediction over the inverse-CDF canonical form: shared
/// exogenous noise couples the factual and counterfactual worlds.
double counterfactual_probability(const Scm& scm, const Event& factual_evidence,
                                  const Assignment& interventions, const Event& target);

/// Pearl's probability of necessity: P(outcome would be 0 had cause been 0,
/// given evidence). Evidence must entail cause=1 and outcome=1; both binary.
double probability_of_necessity(const Scm& scm, NodeId cause, NodeId outcome,
                                const Event& factual_evidence);

Answer answer_query(const Scm& scm, const Query& query);

const char* to_string(QueryKind k);
QueryKind query_kind_from_string(const std::string& s);

/// Shortest round-trip decimal formatting used everywhere a probability is
/// printed or stored. Parsing the result back yields the identical double.
std::string format_probability(double p);

namespace detail {
/// True when every CPT entry equals an integer number of thousandths exactly.
/// Such models are evaluated in 128-bit integer arithmetic, so algebraically
/// equal query routes return bit-identical doubles.
bool permille_graded(const Scm& scm);

/// Correctly rounded num/den for 0 <= num <= den. Exposed for direct testing.
double ratio_to_double(unsigned __int128 num, unsigned __int128 den);
}  // namespace detail

}  // namespace causalbench
