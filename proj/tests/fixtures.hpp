#pragma once

// Shared hand-built models used across the test suites.

#include "causalbench/scm.hpp"

namespace causalbench::testfix {

// Three-variable disease chain: infection -> medicine -> recovery.
// P(A=1)=0.1, P(B=1|A=1)=0.7, P(B=1|A=0)=0.3, P(C=1|B=1)=0.9, P(C=1|B=0)=0.4.
inline Scm disease_scm() {
    Scm scm;
    scm.dag = Dag::make(3, {{0, 1}, {1, 2}});
    scm.metas = {
        {0, "infection", VarDomain::binary(), Observability::observed, Role::cause, "medicine"},
        {1, "medicine", VarDomain::binary(), Observability::observed, Role::mediator, "medicine"},
        {2, "recovery", VarDomain::binary(), Observability::observed, Role::outcome, "medicine"},
    };
    Cpt a{0, {}, {}, {{0.9, 0.1}}};
    Cpt b{1, {0}, {2}, {{0.7, 0.3}, {0.3, 0.7}}};
    Cpt c{2, {1}, {2}, {{0.6, 0.4}, {0.1, 0.9}}};
    scm.cpts = {a, b, c};
    return scm;
}

// Exam-pass model with an ability confounder S over outcome E and an
// independent tutoring flag T. S -> E, T -> E.
// P(S=1)=0.4, P(T=1)=0.25; E=1 surely when S=1; otherwise 0.8 with tutoring,
// 0.5 without.
inline Scm tutoring_scm() {
    Scm scm;
    scm.dag = Dag::make(3, {{0, 2}, {1, 2}});
    scm.metas = {
        {0, "strong ability", VarDomain::binary(), Observability::observed, Role::cause,
         "education"},
        {1, "tutoring", VarDomain::binary(), Observability::observed, Role::cause, "education"},
        {2, "passing the exam", VarDomain::binary(), Observability::observed, Role::outcome,
         "education"},
    };
    Cpt s{0, {}, {}, {{0.6, 0.4}}};
    Cpt t{1, {}, {}, {{0.75, 0.25}}};
    // rows over (S,T) ascending, T fastest: (0,0) (0,1) (1,0) (1,1)
    Cpt e{2, {0, 1}, {2, 2}, {{0.5, 0.5}, {0.2, 0.8}, {0.0, 1.0}, {0.0, 1.0}}};
    scm.cpts = {s, t, e};
    return scm;
}

}  // namespace causalbench::testfix
