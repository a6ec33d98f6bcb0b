#include "causalbench/textgen.hpp"

// Built-in copies of the shipped vocabulary files. data/vocab/*.json must
// stay in sync; a unit test compares the two.

namespace causalbench {
namespace builtin_vocab {

const char* k_medicine = R"vocab(
{
  "domain": "medicine",
  "opener": "There is a disease.",
  "subject": "people",
  "entries": [
    {
      "label": "infection",
      "roles": [
        "cause"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% people get infected.",
        "event": "people will get infected",
        "if_true": "they are infected",
        "if_false": "they are not infected",
        "is_true": "people are infected",
        "is_false": "people are not infected",
        "do_true": "people get infected",
        "do_false": "people do not get infected",
        "had_true": "the infection occurred",
        "had_false": "the infection not occurred",
        "noun": "the infection",
        "bare_noun": "infection",
        "gerund": "getting infected",
        "people_who": "People who are infected",
        "to_have": "have been infected",
        "tendency_pos": "are more likely to get infected",
        "tendency_neg": "are less likely to get infected",
        "past_false": "people did not get infected",
        "still_true": "still got infected",
        "definite_q": "will they definitely get infected"
      }
    },
    {
      "label": "medicine",
      "roles": [
        "mediator"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% people take medicine.",
        "event": "people will take medicine",
        "if_true": "they take medicine",
        "if_false": "they don't take medicine",
        "is_true": "people take medicine",
        "is_false": "people do not take medicine",
        "do_true": "people take medicine",
        "do_false": "people do not take medicine",
        "had_true": "people taken medicine",
        "had_false": "people not taken medicine",
        "noun": "the medicine intake",
        "bare_noun": "medicine intake",
        "gerund": "taking medicine",
        "people_who": "People who take medicine",
        "to_have": "have taken medicine",
        "tendency_pos": "are more likely to take medicine",
        "tendency_neg": "are less likely to take medicine",
        "past_false": "people did not take medicine",
        "still_true": "still took medicine",
        "definite_q": "will they definitely take medicine"
      }
    },
    {
      "label": "recovery",
      "roles": [
        "outcome"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% people recover in three days.",
        "event": "people will recover in three days",
        "if_true": "they recover",
        "if_false": "they don't recover",
        "is_true": "people recover",
        "is_false": "people do not recover",
        "do_true": "people recover",
        "do_false": "people do not recover",
        "had_true": "recovery occurred",
        "had_false": "recovery not occurred",
        "noun": "the recovery",
        "bare_noun": "recovery",
        "gerund": "recovering",
        "people_who": "People who recover",
        "to_have": "have recovered",
        "tendency_pos": "recover more quickly",
        "tendency_neg": "recover more slowly",
        "past_false": "people did not recover",
        "still_true": "still recovered",
        "definite_q": "will they definitely recover"
      }
    },
    {
      "label": "virus exposure",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people are exposed to the virus.",
        "if_true": "they are exposed to the virus",
        "if_false": "they are not exposed to the virus",
        "event": "people will be exposed to the virus",
        "gerund": "being exposed to the virus"
      }
    },
    {
      "label": "contaminated water",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people drink contaminated water.",
        "if_true": "they drink contaminated water",
        "if_false": "they avoid contaminated water",
        "event": "people will drink contaminated water",
        "gerund": "drinking contaminated water"
      }
    },
    {
      "label": "poor hygiene",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people have poor hygiene.",
        "if_true": "they have poor hygiene",
        "if_false": "they have good hygiene"
      }
    },
    {
      "label": "hospital care",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people receive hospital care.",
        "event": "people will receive hospital care",
        "if_true": "they receive hospital care",
        "if_false": "they do not receive hospital care",
        "gerund": "receiving hospital care",
        "to_have": "have received hospital care"
      }
    },
    {
      "label": "rest",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people rest properly.",
        "event": "people will rest properly",
        "if_true": "they rest properly",
        "if_false": "they do not rest properly",
        "gerund": "resting properly"
      }
    },
    {
      "label": "vaccination",
      "roles": [
        "mediator",
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people are vaccinated.",
        "event": "people will get vaccinated",
        "if_true": "they are vaccinated",
        "if_false": "they are not vaccinated",
        "gerund": "getting vaccinated",
        "to_have": "have been vaccinated"
      }
    },
    {
      "label": "hydration",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people stay hydrated.",
        "event": "people will stay hydrated",
        "if_true": "they stay hydrated",
        "if_false": "they do not stay hydrated"
      }
    },
    {
      "label": "symptom severity",
      "roles": [
        "mediator"
      ],
      "rank": 2,
      "values": [
        "mild",
        "moderate",
        "severe"
      ]
    },
    {
      "label": "complications",
      "roles": [
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "people will develop complications",
        "if_true": "they develop complications",
        "if_false": "they avoid complications",
        "noun": "the complications",
        "bare_noun": "complications"
      }
    },
    {
      "label": "lasting immunity",
      "roles": [
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "people will develop lasting immunity",
        "if_true": "they develop lasting immunity",
        "if_false": "they do not develop lasting immunity"
      }
    },
    {
      "label": "fever",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% people run a fever.",
        "event": "people will run a fever",
        "if_true": "they have a fever",
        "if_false": "they have no fever",
        "gerund": "running a fever"
      }
    },
    {
      "label": "fatigue",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "people will feel fatigued",
        "if_true": "they feel fatigued",
        "if_false": "they feel energetic"
      }
    },
    {
      "label": "coughing",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "people will develop a cough",
        "if_true": "they are coughing",
        "if_false": "they are not coughing"
      }
    },
    {
      "label": "headache",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "loss of appetite",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    }
  ],
  "conditional_overrides": [
    {
      "child": "medicine",
      "given": [
        [
          "infection",
          1
        ]
      ],
      "text": "{p}% people will take medicine if they are infected."
    },
    {
      "child": "medicine",
      "given": [
        [
          "infection",
          0
        ]
      ],
      "text": "{p}% people will take medicine even if they are not infected."
    },
    {
      "child": "recovery",
      "given": [
        [
          "medicine",
          1
        ]
      ],
      "text": "{p}% people will recover in three days if they take medicine."
    },
    {
      "child": "recovery",
      "given": [
        [
          "medicine",
          0
        ]
      ],
      "text": "{p}% people will recover in three days if they don't take medicine."
    }
  ],
  "question_overrides": [
    {
      "kind": "observational",
      "target": [
        [
          "infection",
          [
            1
          ]
        ],
        [
          "recovery",
          [
            0
          ]
        ]
      ],
      "text": "What's the ratio of people that are still infected?"
    }
  ],
  "distractors": [
    {
      "label": "sunny areas",
      "sentence": "Also, {p}% of people who live in sunny areas recover faster."
    },
    {
      "label": "tea",
      "sentence": "Also, {p}% of people who drink tea daily report feeling better."
    },
    {
      "label": "morning walks",
      "sentence": "Also, {p}% of people who take morning walks say they feel healthier."
    }
  ],
  "confounders": [
    {
      "label": "strong immune systems"
    },
    {
      "label": "healthy diets"
    },
    {
      "label": "regular sleep habits"
    }
  ]
}
)vocab";

const char* k_education = R"vocab(
{
  "domain": "education",
  "opener": "There is an important exam coming up.",
  "subject": "students",
  "entries": [
    {
      "label": "strong ability",
      "roles": [
        "cause"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of students have strong ability.",
        "event": "students will show strong ability",
        "if_true": "they have strong ability",
        "if_false": "they do not have strong ability",
        "is_true": "students have strong ability",
        "is_false": "students do not have strong ability",
        "gerund": "having strong ability",
        "people_who": "Students with strong ability",
        "to_have": "have strong ability"
      }
    },
    {
      "label": "tutoring",
      "roles": [
        "mediator"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of students receive tutoring.",
        "event": "students will receive tutoring",
        "if_true": "they receive tutoring",
        "if_false": "they do not receive tutoring",
        "is_true": "students receive tutoring",
        "is_false": "students do not receive tutoring",
        "do_true": "students receive tutoring",
        "do_false": "students do not receive tutoring",
        "had_true": "tutoring been provided",
        "had_false": "tutoring not been provided",
        "noun": "the tutoring",
        "bare_noun": "tutoring",
        "gerund": "receiving tutoring",
        "people_who": "Students who receive tutoring",
        "to_have": "have received tutoring",
        "tendency_pos": "are more likely to seek tutoring",
        "tendency_neg": "are less likely to seek tutoring",
        "past_false": "students did not receive tutoring",
        "still_true": "still received tutoring",
        "definite_q": "will they definitely receive tutoring"
      }
    },
    {
      "label": "passing the exam",
      "roles": [
        "outcome"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of students pass the exam.",
        "event": "students will pass the exam",
        "if_true": "they pass the exam",
        "if_false": "they fail the exam",
        "is_true": "students pass the exam",
        "is_false": "students fail the exam",
        "had_true": "the exam been passed",
        "had_false": "the exam not been passed",
        "noun": "the exam success",
        "bare_noun": "exam success",
        "gerund": "passing the exam",
        "people_who": "Students who pass the exam",
        "to_have": "have passed the exam",
        "tendency_pos": "are more likely to pass",
        "tendency_neg": "are less likely to pass",
        "past_false": "students did not pass the exam",
        "still_true": "still passed the exam",
        "definite_q": "will they definitely pass the exam"
      }
    },
    {
      "label": "early preparation",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% of students start preparing early.",
        "if_true": "they start preparing early",
        "if_false": "they start preparing late",
        "event": "students will start preparing early"
      }
    },
    {
      "label": "good attendance",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% of students attend class regularly.",
        "if_true": "they attend class regularly",
        "if_false": "they skip classes"
      }
    },
    {
      "label": "prior coursework",
      "roles": [
        "cause"
      ],
      "rank": 1
    },
    {
      "label": "group study",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "event": "students will join group study",
        "if_true": "they join group study",
        "if_false": "they study alone"
      }
    },
    {
      "label": "practice tests",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "event": "students will take practice tests",
        "if_true": "they take practice tests",
        "if_false": "they skip practice tests"
      }
    },
    {
      "label": "office hours visits",
      "roles": [
        "mediator"
      ],
      "rank": 1
    },
    {
      "label": "study intensity",
      "roles": [
        "mediator"
      ],
      "rank": 2,
      "values": [
        "low",
        "medium",
        "high"
      ]
    },
    {
      "label": "high grades",
      "roles": [
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "students will earn high grades",
        "if_true": "they earn high grades",
        "if_false": "they earn low grades"
      }
    },
    {
      "label": "scholarship offers",
      "roles": [
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "motivation",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "if_true": "they are motivated",
        "if_false": "they lack motivation",
        "event": "students will stay motivated"
      }
    },
    {
      "label": "focus",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "confidence",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "note taking",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "class participation",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    }
  ],
  "conditional_overrides": [],
  "question_overrides": [
    {
      "kind": "observational",
      "target": [
        [
          "passing the exam",
          [
            1
          ]
        ]
      ],
      "text": "What is the pass rate?"
    }
  ],
  "distractors": [
    {
      "label": "lucky charms",
      "sentence": "Also, {p}% of students who carry lucky charms feel more prepared."
    },
    {
      "label": "blue pens",
      "sentence": "Also, {p}% of students who write with blue pens report finishing earlier."
    }
  ],
  "confounders": [
    {
      "label": "supportive families"
    },
    {
      "label": "well-funded schools"
    }
  ]
}
)vocab";

const char* k_economics = R"vocab(
{
  "domain": "economics",
  "opener": "Consider a regional economy.",
  "subject": "regions",
  "entries": [
    {
      "label": "foreign investment",
      "roles": [
        "cause"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of regions attract foreign investment.",
        "event": "regions will attract foreign investment",
        "if_true": "they attract foreign investment",
        "if_false": "they attract no foreign investment",
        "is_true": "regions attract foreign investment",
        "is_false": "regions attract no foreign investment",
        "gerund": "attracting foreign investment",
        "people_who": "Regions that attract foreign investment",
        "to_have": "have attracted foreign investment"
      }
    },
    {
      "label": "subsidies",
      "roles": [
        "mediator"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of regions receive subsidies.",
        "event": "regions will receive subsidies",
        "if_true": "they receive subsidies",
        "if_false": "they receive no subsidies",
        "is_true": "regions receive subsidies",
        "is_false": "regions receive no subsidies",
        "do_true": "regions receive subsidies",
        "do_false": "regions receive no subsidies",
        "had_true": "subsidies been granted",
        "had_false": "subsidies not been granted",
        "noun": "the subsidies",
        "bare_noun": "subsidies",
        "gerund": "receiving subsidies",
        "people_who": "Regions that receive subsidies",
        "to_have": "have received subsidies",
        "tendency_pos": "are more likely to receive subsidies",
        "tendency_neg": "are less likely to receive subsidies",
        "past_false": "regions received no subsidies",
        "still_true": "still received subsidies",
        "definite_q": "will they definitely receive subsidies"
      }
    },
    {
      "label": "economic growth",
      "roles": [
        "outcome"
      ],
      "rank": 0,
      "phrases": {
        "prior": "Now we know that {p}% of regions see economic growth.",
        "event": "regions will see economic growth",
        "if_true": "they see economic growth",
        "if_false": "they see no economic growth",
        "is_true": "regions see economic growth",
        "is_false": "regions see no economic growth",
        "had_true": "economic growth occurred",
        "had_false": "economic growth not occurred",
        "noun": "the economic growth",
        "bare_noun": "economic growth",
        "gerund": "growing economically",
        "people_who": "Regions that grow economically",
        "to_have": "have grown economically",
        "tendency_pos": "grow faster",
        "tendency_neg": "grow slower",
        "past_false": "regions saw no economic growth",
        "still_true": "still grew economically",
        "definite_q": "will they definitely see economic growth"
      }
    },
    {
      "label": "new regulation",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% of regions adopt the new regulation.",
        "if_true": "they adopt the new regulation",
        "if_false": "they reject the new regulation"
      }
    },
    {
      "label": "drought",
      "roles": [
        "cause"
      ],
      "rank": 1,
      "phrases": {
        "prior": "Now we know that {p}% of regions suffer a drought.",
        "if_true": "they suffer a drought",
        "if_false": "they have normal rainfall"
      }
    },
    {
      "label": "trade agreements",
      "roles": [
        "cause"
      ],
      "rank": 1
    },
    {
      "label": "hiring programs",
      "roles": [
        "mediator"
      ],
      "rank": 1,
      "phrases": {
        "event": "regions will launch hiring programs",
        "if_true": "they launch hiring programs",
        "if_false": "they freeze hiring"
      }
    },
    {
      "label": "price controls",
      "roles": [
        "mediator"
      ],
      "rank": 1
    },
    {
      "label": "advertising campaigns",
      "roles": [
        "mediator"
      ],
      "rank": 1
    },
    {
      "label": "market demand",
      "roles": [
        "mediator"
      ],
      "rank": 2,
      "values": [
        "weak",
        "steady",
        "strong"
      ]
    },
    {
      "label": "unemployment decline",
      "roles": [
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "event": "unemployment will decline",
        "if_true": "unemployment declines",
        "if_false": "unemployment persists"
      }
    },
    {
      "label": "rising exports",
      "roles": [
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "consumer confidence",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1,
      "phrases": {
        "if_true": "consumers are confident",
        "if_false": "consumers are wary"
      }
    },
    {
      "label": "productivity",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "savings rates",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "inflation",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    },
    {
      "label": "credit access",
      "roles": [
        "cause",
        "mediator",
        "outcome"
      ],
      "rank": 1
    }
  ],
  "conditional_overrides": [],
  "question_overrides": [],
  "distractors": [
    {
      "label": "scenic coastlines",
      "sentence": "Also, {p}% of regions with scenic coastlines report optimism."
    },
    {
      "label": "historic districts",
      "sentence": "Also, {p}% of regions with historic districts attract more tourists."
    }
  ],
  "confounders": [
    {
      "label": "stable institutions"
    },
    {
      "label": "skilled workforces"
    }
  ]
}
)vocab";

}  // namespace builtin_vocab
}  // namespace causalbench
