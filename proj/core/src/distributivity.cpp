// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <cstdint>
#include <cstring>
#include <map>
#include <unordered_map>

#include "ormt/constraint_eval.hpp"
#include "ormt/equivalence.hpp"

namespace ormt {
namespace {

// Encodes populations over a fixed atom universe as bit vectors so that
// union and difference become word operations.
class Codec {
 public:
  explicit Codec(const std::vector<Population>& pops) {
    for (const auto& p : pops) {
      for (const auto& [t, xs] : p.objects) {
        for (const auto& x : xs) index_.emplace(std::make_pair(t, Row{x}), 0);
      }
      for (const auto& [t, r] : p.relations) {
        for (const auto& row : r.rows()) index_.emplace(std::make_pair(t, row), 0);
      }
    }
    std::size_t k = 0;
    for (auto& [atom, i] : index_) i = k++;
    words_ = (k + 63) / 64;
    if (words_ == 0) words_ = 1;
  }

  std::size_t words() const { return words_; }

  // Bits of the tuples of relationship types; the rest are object instances.
  std::vector<std::uint64_t> fact_mask(const Universe& u) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (const auto& [atom, i] : index_) {
      if (u.is_relationship(atom.first)) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return mask;
  }

  void encode(const Population& p, std::uint64_t* out) const {
    std::fill(out, out + words_, 0);
    auto set = [&](const TypeId& t, const Row& row) {
      std::size_t i = index_.at({t, row});
      out[i / 64] |= std::uint64_t{1} << (i % 64);
    };
    for (const auto& [t, xs] : p.objects) {
      for (const auto& x : xs) set(t, Row{x});
    }
    for (const auto& [t, r] : p.relations) {
      for (const auto& row : r.rows()) set(t, row);
    }
  }

 private:
  std::map<std::pair<TypeId, Row>, std::size_t> index_;
  std::size_t words_ = 1;
};

std::string key_of(const std::uint64_t* w, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(w), n * sizeof(std::uint64_t));
}

}  // namespace

DistributivityReport check_update_distributivity(const InstantiatedTransformation& inst,
                                                 const DomainBounds& b,
                                                 const DistributivityOptions& opts) {
  Schema from = from_view(inst);
  EnumerateOptions eopts;
  eopts.extra_instances = val_images(from);
  auto more = val_images(to_view(inst));
  eopts.extra_instances.insert(more.begin(), more.end());
  StateSpace space = enumerate_state_space(from, b, eopts);

  std::set<TypeId> mu_types;
  for (const auto& r : inst.update_rules) {
    if (opts.strict_mu || !is_constant(r.body)) mu_types.insert(r.defines);
  }
  const std::set<TypeId> base = base_types(from);

  std::vector<Population> bases, images;
  for (const auto& p : space.pops) {
    bases.push_back(restrict_population(p, base));
    images.push_back(restrict_population(p, mu_types));
  }
  Codec bc(bases);
  Codec ic(images);
  const std::size_t bw = bc.words();
  const std::size_t iw = ic.words();
  const std::size_t n = bases.size();
  std::vector<std::uint64_t> bbits(n * bw), ibits(n * iw);
  std::unordered_map<std::string, std::size_t> lookup;
  for (std::size_t i = 0; i < n; ++i) {
    bc.encode(bases[i], &bbits[i * bw]);
    ic.encode(images[i], &ibits[i * iw]);
    lookup.emplace(key_of(&bbits[i * bw], bw), i);
  }

  DistributivityReport report;
  report.bounds = b;
  report.populations = n;
  // Removing facts leaves the instances in place, so minus only subtracts
  // the relationship tuples of x.
  const std::vector<std::uint64_t> facts = bc.fact_mask(from.universe);
  std::vector<std::uint64_t> y(bw);
  for (SetOp op : {SetOp::Union, SetOp::Minus}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t* p = &bbits[i * bw];
        const std::uint64_t* x = &bbits[j * bw];
        for (std::size_t w = 0; w < bw; ++w) y[w] = op == SetOp::Union ? p[w] | x[w] : p[w] & ~(x[w] & facts[w]);
        auto hit = lookup.find(key_of(y.data(), bw));
        if (hit == lookup.end()) continue;
        ++report.guarded_pairs;
        const std::uint64_t* mp = &ibits[i * iw];
        const std::uint64_t* mx = &ibits[j * iw];
        const std::uint64_t* my = &ibits[hit->second * iw];
        bool ok = true;
        for (std::size_t w = 0; w < iw && ok; ++w) {
          std::uint64_t combined = op == SetOp::Union ? mp[w] | mx[w] : mp[w] & ~mx[w];
          ok = combined == my[w];
        }
        if (ok || report.counterexample) continue;
        report.holds = false;
        report.counterexample = DistributivityCounterexample{
            op, bases[i], bases[j], images[hit->second], pop_combine(images[i], images[j], op)};
      }
    }
  }
  return report;
}

}  // namespace ormt
