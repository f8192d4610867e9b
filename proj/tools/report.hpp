// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_TOOLS_REPORT_HPP_
#define ORMT_TOOLS_REPORT_HPP_

#include "json.hpp"
#include "ormt/bounds.hpp"
#include "ormt/equivalence.hpp"
#include "ormt/population.hpp"
#include "ormt/transform.hpp"
#include "ormt/universe.hpp"

namespace ormt::cli {

using nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

ordered_json envelope(std::string_view command);
ordered_json to_json(const Population& p);
ordered_json to_json(const WellFormedReport& r);
ordered_json to_json(const DomainBounds& b);
ordered_json to_json(const CleanupTrace& t);
ordered_json to_json(const EquivalenceVerdict& v);
ordered_json to_json(const TranslationVerdict& v);
ordered_json to_json(const BijectionReport& r);
ordered_json to_json(const DistributivityReport& r);

}  // namespace ormt::cli

#endif  // ORMT_TOOLS_REPORT_HPP_
