// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_EQUIVALENCE_HPP_
#define ORMT_EQUIVALENCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ormt/bounds.hpp"
#include "ormt/population.hpp"
#include "ormt/schema.hpp"
#include "ormt/scheme.hpp"
#include "ormt/state_space.hpp"

namespace ormt {

// How the state spaces of two schemas over one vocabulary relate. A schema
// with fewer valid populations is the stronger one.
enum class Comparison { Equivalent, FirstStronger, SecondStronger, Incomparable };
std::string_view to_string(Comparison c);

struct EquivalenceVerdict {
  Comparison comparison = Comparison::Equivalent;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  std::optional<Population> only_in_first;
  std::optional<Population> only_in_second;
  DomainBounds bounds;  // the verdict holds at these bounds only
};

// Compares the sets of valid full populations. Throws VocabularyMismatch
// unless both schemas have the same types.
EquivalenceVerdict check_direct_equivalence(const Schema& s1, const Schema& s2,
                                            const DomainBounds& b);

// The listed components of a transformation read in either direction. In the
// to-view the From types are derived from the To types by the derivation
// rules; in the from-view the update rules derive the To types. Constant
// rules populate reference types in both.
Schema to_view(const InstantiatedTransformation& inst);
Schema from_view(const InstantiatedTransformation& inst);

enum class Side { From, To };

// `s` with the components of one side of the transformation added, derived
// from the types `s` already has. Extending the schema that holds the From
// types with side To, and the one that holds the To types with side From,
// yields two schemas over the same vocabulary.
Schema conservative_extension(const Schema& s, const InstantiatedTransformation& inst, Side side);

// Compares two schemas with different vocabularies through the rules of a
// transformation whose From types live in `s1` and whose To types live in
// `s2`. A population of one schema is translated by extending it with the
// other side's components; the translation must be valid in the other
// schema. The schema all of whose populations translate is the stronger one:
// each of its interpretations is an interpretation of the other.
struct TranslationVerdict {
  Comparison comparison = Comparison::Equivalent;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  // A valid population of s1 (resp. s2) without a valid translation.
  std::optional<Population> untranslatable_first;
  std::optional<Population> untranslatable_second;
  DomainBounds bounds;
};
TranslationVerdict check_translation(const Schema& s1, const Schema& s2,
                                     const InstantiatedTransformation& inst,
                                     const DomainBounds& b);

enum class SchemeProperty { EquivalencePreserving, Strengthening, Neither };
std::string_view to_string(SchemeProperty p);

struct SchemeVerdict {
  SchemeProperty property = SchemeProperty::Neither;
  EquivalenceVerdict detail;  // first = from-view, second = to-view
};

SchemeVerdict check_scheme_property(const InstantiatedTransformation& inst, const DomainBounds& b);

// Checks that restricting each valid from-view population to the to-view
// base types is a bijection onto the to-view state space, and that deriving
// back gives the original population.
struct BijectionReport {
  bool bijective = false;
  bool round_trip = false;
  std::size_t from_size = 0;
  std::size_t to_size = 0;
  std::size_t images = 0;
  std::optional<std::string> failure;
};
BijectionReport verify_bijection(const InstantiatedTransformation& inst, const DomainBounds& b);

struct DistributivityOptions {
  bool strict_mu = false;  // also treat constant update rules as part of the mapping
};

struct DistributivityCounterexample {
  SetOp op = SetOp::Union;
  Population p;
  Population x;
  Population expected;  // mu(p op x)
  Population actual;    // mu(p) op mu(x)
};

struct DistributivityReport {
  bool holds = true;
  std::size_t populations = 0;
  std::size_t guarded_pairs = 0;
  std::optional<DistributivityCounterexample> counterexample;
  DomainBounds bounds;
};

// Checks mu(p op x) = mu(p) op mu(x) for union and minus over every pair of
// valid from-side base populations whose combination is valid too. Minus
// subtracts relationship tuples only; object instances of p are kept.
DistributivityReport check_update_distributivity(const InstantiatedTransformation& inst,
                                                 const DomainBounds& b,
                                                 const DistributivityOptions& opts = {});

}  // namespace ormt

#endif  // ORMT_EQUIVALENCE_HPP_
