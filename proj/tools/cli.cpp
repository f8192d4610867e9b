// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "CLI11.hpp"
#include "ormt/error.hpp"
#include "ormt/scheme.hpp"
#include "ormt/state_space.hpp"
#include "report.hpp"

namespace ormt::cli {
namespace fs = std::filesystem;

namespace {

// Raised for problems with the inputs themselves, as opposed to what the
// inputs say.
struct InputError {
  Error error;
};

template <typename F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e};
  }
}

struct RunConfig {
  std::string command;
  std::vector<std::string> schemas;
  std::string scheme;
  std::string parlist;
  std::string context;
  std::string bounds;
  std::string out;
  std::string mode = "optimise";
  bool json = false;
  bool strict_mu = false;
  bool pi_literal = false;
  bool list = false;
  bool equiv = false;
  bool stronger = false;
  bool distrib = false;
};

std::string resolve_scheme(const std::string& name) {
  if (fs::exists(name)) return name;
  for (const auto& dir : scheme_dirs()) {
    fs::path p = fs::path(dir) / (name + ".scheme");
    if (fs::exists(p)) return p.string();
  }
  throw Error(ErrorKind::Io, "no scheme file or built-in scheme named '" + name + "'");
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err) {}

  int dispatch() {
    if (cfg_.command == "validate") return validate();
    if (cfg_.command == "apply") return apply();
    if (cfg_.command == "invert") return invert_scheme();
    if (cfg_.command == "cleanup") return cleanup_schema();
    if (cfg_.command == "check") return check();
    if (cfg_.command == "enumerate") return enumerate();
    if (cfg_.command == "schemes") return schemes();
    throw InputError{Error(ErrorKind::Syntax, "unknown command " + cfg_.command)};
  }

 private:
  Schema schema_at(std::size_t i, NameCheck names = NameCheck::Strict) const {
    if (cfg_.schemas.size() <= i) {
      throw InputError{Error(ErrorKind::Io, "missing schema file argument")};
    }
    return load([&] { return load_schema(cfg_.schemas[i], names); });
  }

  DomainBounds bounds(bool required) const {
    if (cfg_.bounds.empty()) {
      if (required) throw InputError{Error(ErrorKind::Io, "--bounds is required")};
      return {};
    }
    return load([&] { return parse_bounds(read_file(cfg_.bounds)); });
  }

  InstantiatedTransformation instance(const Schema* context) const {
    if (cfg_.scheme.empty() || cfg_.parlist.empty()) {
      throw InputError{Error(ErrorKind::Io, "--scheme and --parlist are required")};
    }
    auto t = load([&] { return parse_scheme(read_file(resolve_scheme(cfg_.scheme))); });
    auto x = load([&] { return parse_parlist(read_file(cfg_.parlist)); });
    return instantiate(t, x, context);
  }

  std::optional<Schema> context() const {
    if (!cfg_.context.empty()) return load([&] { return load_schema(cfg_.context); });
    if (!cfg_.schemas.empty()) return schema_at(0);
    return std::nullopt;
  }

  void emit_text(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out);
    if (!f) throw InputError{Error(ErrorKind::Io, "cannot write " + cfg_.out)};
    f << text;
  }

  void emit_json(const ordered_json& j) { out_ << j.dump(2) << "\n"; }

  int validate() {
    Schema s = schema_at(0, NameCheck::Deferred);
    auto report = validate_schema(s);
    if (cfg_.json) {
      auto j = envelope("validate");
      j["schema"] = s.name;
      j["report"] = to_json(report);
      emit_json(j);
    } else {
      for (const auto& a : report.results) {
        out_ << (a.passed ? "PASS " : "FAIL ") << a.label();
        if (!a.passed) out_ << ": " << a.witness;
        out_ << "\n";
      }
      out_ << (report.passed() ? "schema is correct\n" : "schema is not correct\n");
    }
    return report.passed() ? kOk : kFailed;
  }

  int apply() {
    Schema s = schema_at(0);
    auto mode = parse_mode(cfg_.mode);
    if (!mode) throw InputError{Error(ErrorKind::Syntax, "unknown mode " + cfg_.mode)};
    auto inst = instance(&s);
    CleanupOptions opts;
    opts.pi_literal = cfg_.pi_literal;
    ApplyResult res = apply_transformation(inst, s, *mode, opts);
    std::string text = serialize_schema(res.schema);
    if (cfg_.json) {
      auto j = envelope("apply");
      j["mode"] = to_string(*mode);
      j["transformation"] = inst.scheme_name;
      j["trace"] = to_json(res.trace);
      if (cfg_.out.empty()) {
        j["schema"] = text;
      } else {
        emit_text(text);
        j["schema_file"] = cfg_.out;
      }
      emit_json(j);
    } else {
      emit_text(text);
    }
    return kOk;
  }

  int invert_scheme() {
    auto ctx = context();
    auto inst = instance(ctx ? &*ctx : nullptr);
    emit_text(serialize_instantiated(invert(inst)));
    return kOk;
  }

  int cleanup_schema() {
    Schema s = schema_at(0);
    CleanupOptions opts;
    opts.pi_literal = cfg_.pi_literal;
    CleanupTrace trace;
    Schema result = cleanup(s, opts, &trace);
    std::string text = serialize_schema(result);
    if (cfg_.json) {
      auto j = envelope("cleanup");
      j["trace"] = to_json(trace);
      j["schema"] = text;
      emit_json(j);
    } else {
      emit_text(text);
    }
    return kOk;
  }

  int check() {
    const int picked = int{cfg_.equiv} + int{cfg_.stronger} + int{cfg_.distrib};
    if (picked != 1) {
      throw InputError{Error(ErrorKind::Syntax, "check needs one of --equiv, --stronger, --distrib")};
    }
    DomainBounds b = bounds(true);
    if (cfg_.distrib) return check_distrib(b);
    if (cfg_.scheme.empty()) return check_schemas(b);
    if (cfg_.schemas.size() >= 2) return check_pair(b);
    return check_scheme(b);
  }

  // Two schemas over one vocabulary.
  int check_schemas(const DomainBounds& b) {
    Schema s1 = schema_at(0);
    Schema s2 = schema_at(1);
    auto v = check_direct_equivalence(s1, s2, b);
    return report_comparison("direct", v.comparison, to_json(v), [&] {
      out_ << "sizes: " << v.first_size << " / " << v.second_size << "\n";
      if (v.only_in_first) out_ << "only in " << s1.name << ":\n" << population_text(*v.only_in_first, s1.name);
      if (v.only_in_second) out_ << "only in " << s2.name << ":\n" << population_text(*v.only_in_second, s2.name);
    }, s1.name, s2.name);
  }

  // Two schemas related by a transformation, From side first.
  int check_pair(const DomainBounds& b) {
    Schema s1 = schema_at(0);
    Schema s2 = schema_at(1);
    auto inst = instance(&s1);
    if (cfg_.equiv) {
      Schema e1 = conservative_extension(s1, inst, Side::To);
      Schema e2 = conservative_extension(s2, inst, Side::From);
      auto v = check_direct_equivalence(e1, e2, b);
      return report_comparison("extension", v.comparison, to_json(v), [&] {
        out_ << "sizes: " << v.first_size << " / " << v.second_size << "\n";
        if (v.only_in_first) out_ << "only in " << s1.name << ":\n" << population_text(*v.only_in_first, s1.name);
        if (v.only_in_second) out_ << "only in " << s2.name << ":\n" << population_text(*v.only_in_second, s2.name);
      }, s1.name, s2.name);
    }
    auto v = check_translation(s1, s2, inst, b);
    return report_comparison("translation", v.comparison, to_json(v), [&] {
      out_ << "sizes: " << v.first_size << " / " << v.second_size << "\n";
      if (v.untranslatable_first) {
        out_ << "valid in " << s1.name << " but not in " << s2.name << ":\n"
             << population_text(*v.untranslatable_first, s1.name);
      }
      if (v.untranslatable_second) {
        out_ << "valid in " << s2.name << " but not in " << s1.name << ":\n"
             << population_text(*v.untranslatable_second, s2.name);
      }
    }, s1.name, s2.name);
  }

  int report_comparison(std::string_view how, Comparison c, ordered_json detail,
                        const std::function<void()>& text_detail, const std::string& first,
                        const std::string& second) {
    const bool holds = cfg_.equiv ? c == Comparison::Equivalent
                                  : c == Comparison::FirstStronger ||
                                        c == Comparison::SecondStronger;
    std::string verdict;
    switch (c) {
      case Comparison::Equivalent:
        verdict = "equivalent";
        break;
      case Comparison::FirstStronger:
        verdict = first + " is stronger than " + second;
        break;
      case Comparison::SecondStronger:
        verdict = second + " is stronger than " + first;
        break;
      case Comparison::Incomparable:
        verdict = "incomparable";
        break;
    }
    if (cfg_.json) {
      auto j = envelope("check");
      j["check"] = how;
      j["verdict"] = verdict;
      j["holds"] = holds;
      j["detail"] = std::move(detail);
      emit_json(j);
    } else {
      out_ << "verdict: " << verdict << "\n";
      text_detail();
      out_ << "at bounds:\n" << bounds_text(bounds(true));
    }
    return holds ? kOk : kFailed;
  }

  int check_scheme(const DomainBounds& b) {
    auto ctx = context();
    auto inst = instance(ctx ? &*ctx : nullptr);
    auto v = check_scheme_property(inst, b);
    std::optional<BijectionReport> bij;
    if (cfg_.equiv && v.property == SchemeProperty::EquivalencePreserving) {
      bij = verify_bijection(inst, b);
    }
    const bool holds = cfg_.equiv ? v.property == SchemeProperty::EquivalencePreserving &&
                                        bij && bij->bijective && bij->round_trip
                                  : v.property == SchemeProperty::Strengthening;
    if (cfg_.json) {
      auto j = envelope("check");
      j["check"] = "scheme";
      j["transformation"] = inst.scheme_name;
      j["verdict"] = to_string(v.property);
      j["holds"] = holds;
      j["detail"] = to_json(v.detail);
      if (bij) j["bijection"] = to_json(*bij);
      emit_json(j);
    } else {
      out_ << "verdict: " << inst.scheme_name << " is " << to_string(v.property) << "\n";
      out_ << "state spaces (from side / to side): " << v.detail.first_size << " / "
           << v.detail.second_size << "\n";
      if (v.detail.only_in_first) {
        out_ << "only on the from side:\n" << population_text(*v.detail.only_in_first, "from");
      }
      if (v.detail.only_in_second) {
        out_ << "only on the to side:\n" << population_text(*v.detail.only_in_second, "to");
      }
      if (bij) {
        out_ << "mapping is " << (bij->bijective ? "a bijection" : "not a bijection")
             << ", inverse " << (bij->round_trip ? "restores" : "does not restore")
             << " every population (" << bij->images << " images)\n";
        if (bij->failure) out_ << bij->failure.value() << "\n";
      }
      out_ << "at bounds:\n" << bounds_text(b);
    }
    return holds ? kOk : kFailed;
  }

  int check_distrib(const DomainBounds& b) {
    auto ctx = context();
    auto inst = instance(ctx ? &*ctx : nullptr);
    DistributivityOptions opts;
    opts.strict_mu = cfg_.strict_mu;
    auto r = check_update_distributivity(inst, b, opts);
    if (cfg_.json) {
      auto j = envelope("check");
      j["check"] = "distributivity";
      j["transformation"] = inst.scheme_name;
      j["strict_mu"] = cfg_.strict_mu;
      j["holds"] = r.holds;
      j["detail"] = to_json(r);
      emit_json(j);
    } else {
      out_ << "verdict: updates " << (r.holds ? "distribute" : "do not distribute") << " over "
           << inst.scheme_name << "'s update rules\n";
      out_ << r.populations << " populations, " << r.guarded_pairs << " guarded pairs\n";
      if (r.counterexample) {
        const auto& c = *r.counterexample;
        out_ << "counterexample for " << (c.op == SetOp::Union ? "union" : "minus") << ":\n"
             << population_text(c.p, "p") << population_text(c.x, "x")
             << population_text(c.expected, "mu_of_combination")
             << population_text(c.actual, "combination_of_mu");
      }
      out_ << "at bounds:\n" << bounds_text(b);
    }
    return r.holds ? kOk : kFailed;
  }

  int enumerate() {
    Schema s = schema_at(0);
    DomainBounds b = bounds(false);
    StateSpace space = enumerate_state_space(s, b);
    if (cfg_.json) {
      auto j = envelope("enumerate");
      j["schema"] = s.name;
      j["count"] = space.size();
      j["examined"] = space.examined;
      j["bounds"] = to_json(b);
      if (cfg_.list) {
        ordered_json pops = ordered_json::array();
        for (const auto& p : space.pops) pops.push_back(to_json(p));
        j["populations"] = std::move(pops);
      }
      emit_json(j);
    } else {
      out_ << space.size() << "\n";
      if (cfg_.list) {
        for (const auto& p : space.pops) out_ << population_text(p, s.name);
      }
    }
    return kOk;
  }

  int schemes() {
    std::vector<std::pair<std::string, TransformationScheme>> found;
    std::set<std::string> seen;
    for (const auto& dir : scheme_dirs()) {
      if (!fs::is_directory(dir)) continue;
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".scheme") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        std::string id = f.stem().string();
        if (!seen.insert(id).second) continue;
        found.emplace_back(id, load([&] { return parse_scheme(read_file(f.string())); }));
      }
    }
    if (cfg_.json) {
      auto j = envelope("schemes");
      ordered_json list = ordered_json::array();
      for (const auto& [id, t] : found) {
        ordered_json item;
        item["id"] = id;
        item["name"] = t.name;
        item["property"] = t.property ? ordered_json(*t.property) : ordered_json(nullptr);
        item["arity_variables"] = t.arity_vars();
        list.push_back(std::move(item));
      }
      j["schemes"] = std::move(list);
      emit_json(j);
    } else {
      for (const auto& [id, t] : found) {
        out_ << id << "  " << t.name << "  " << t.property.value_or("unspecified") << "\n";
      }
    }
    return kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax:
    case ErrorKind::Io:
    case ErrorKind::UnboundedDomain:
      return kInputError;
    case ErrorKind::SpaceExceeded:
      return kResourceCap;
    default:
      return kFailed;
  }
}

}  // namespace

std::vector<std::string> scheme_dirs() {
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("ORMT_SCHEME_PATH")) dirs.emplace_back(env);
  dirs.emplace_back(ORMT_INSTALLED_SCHEME_DIR);
  dirs.emplace_back(ORMT_SOURCE_SCHEME_DIR);
  return dirs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Conceptual schema transformations: apply, check and enumerate", "ormt"};
  app.require_subcommand(1);

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "Report as JSON"); };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the resulting schema to this file");
  };
  auto scheme_opts = [&](CLI::App* sub) {
    sub->add_option("--scheme", cfg.scheme, "Scheme file or built-in scheme name");
    sub->add_option("--parlist", cfg.parlist, "Parameter list file");
  };

  auto* validate = app.add_subcommand("validate", "Check the well-formedness axioms of a schema");
  validate->add_option("schema", cfg.schemas, "Schema file")->required()->expected(1);
  json_flag(validate);

  auto* apply = app.add_subcommand("apply", "Apply a transformation to a schema");
  apply->add_option("schema", cfg.schemas, "Schema file")->required()->expected(1);
  scheme_opts(apply);
  apply->add_option("--mode", cfg.mode, "alternative, enrich or optimise");
  apply->add_flag("--pi-literal", cfg.pi_literal, "Protect subtypes instead of supertypes");
  out_opt(apply);
  json_flag(apply);

  auto* invert = app.add_subcommand("invert", "Print the inverse of an instantiated scheme");
  scheme_opts(invert);
  invert->add_option("--schema", cfg.context, "Schema supplying the context of the parameters");
  out_opt(invert);

  auto* clean = app.add_subcommand("cleanup", "Remove obsolete derived and isolated types");
  clean->add_option("schema", cfg.schemas, "Schema file")->required()->expected(1);
  clean->add_flag("--pi-literal", cfg.pi_literal, "Protect subtypes instead of supertypes");
  out_opt(clean);
  json_flag(clean);

  auto* check = app.add_subcommand("check", "Compare state spaces at bounds");
  check->add_option("schemas", cfg.schemas, "Zero, one or two schema files")->expected(0, 2);
  check->add_flag("--equiv", cfg.equiv, "Equivalence");
  check->add_flag("--stronger", cfg.stronger, "Strengthening");
  check->add_flag("--distrib", cfg.distrib, "Update distributivity");
  check->add_flag("--strict-mu", cfg.strict_mu, "Include constant update rules in the mapping");
  check->add_option("--schema", cfg.context, "Schema supplying the context of the parameters");
  check->add_option("--bounds", cfg.bounds, "Bounds file");
  scheme_opts(check);
  json_flag(check);

  auto* enumerate = app.add_subcommand("enumerate", "Count the valid populations of a schema");
  enumerate->add_option("schema", cfg.schemas, "Schema file")->required()->expected(1);
  enumerate->add_option("--bounds", cfg.bounds, "Bounds file");
  enumerate->add_flag("--list", cfg.list, "Print every population");
  json_flag(enumerate);

  auto* schemes = app.add_subcommand("schemes", "List the built-in schemes");
  json_flag(schemes);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  auto fail = [&](const Error& e, int code) {
    err << "error: " << e.what() << "\n";
    if (cfg.json) {
      auto j = envelope(cfg.command);
      j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    return code;
  };
  try {
    Session session(cfg, out, err);
    return session.dispatch();
  } catch (const InputError& e) {
    return fail(e.error, e.error.kind() == ErrorKind::SpaceExceeded ? kResourceCap : kInputError);
  } catch (const Error& e) {
    return fail(e, exit_code_for(e.kind()));
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ormt::cli
