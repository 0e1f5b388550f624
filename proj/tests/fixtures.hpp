#ifndef DTLS_TESTS_FIXTURES_HPP
#define DTLS_TESTS_FIXTURES_HPP

#include "dtls/dataset.hpp"
#include "dtls/tree.hpp"

namespace dtls::test {

// Three one-feature examples (1, blue), (2, red), (3, blue) under a single
// cut at threshold 5: everything routes left into a blue leaf.
inline Dataset f1_data() {
  return Dataset(3, 1, {1, 2, 3}, {Label::Blue, Label::Red, Label::Blue});
}

inline DecisionTree f1_tree() {
  return DecisionTree({Node::cut(0, 5, 1, 2), Node::leaf(Label::Blue), Node::leaf(Label::Red)},
                      0);
}

// Two examples that the initial cut on f2 cannot separate but a cut on f1
// can: (1,1, blue) and (2,1, red) under Cut(f2, 1).
inline Dataset f2_data() {
  return Dataset(2, 2, {1, 1, 2, 1}, {Label::Blue, Label::Red});
}

inline DecisionTree f2_tree() {
  return DecisionTree({Node::cut(1, 1, 1, 2), Node::leaf(Label::Blue), Node::leaf(Label::Red)},
                      0);
}

// Like F1 but with the third example red, so one adjustment reaches zero
// errors: (1, blue), (2, red), (3, red) under Cut(f1, 5).
inline Dataset f3_data() {
  return Dataset(3, 1, {1, 2, 3}, {Label::Blue, Label::Red, Label::Red});
}

inline DecisionTree f3_tree() { return f1_tree(); }

}  // namespace dtls::test

#endif
