#include "nsarith/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nsarith/errors.hpp"
#include "nsarith/json_io.hpp"
#include "nsarith/suite.hpp"
#include "nsarith/text.hpp"

namespace nsarith::cli {

namespace {

using json::Json;

struct Common {
  int dim = 0;
  bool pretty = false;
  std::size_t div_budget = ModelConfig{}.div_budget;
  std::uint64_t n_max = ModelConfig{}.search_n_max;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--dim", c.dim, "Exponent dimension (1 or 2); inferred from the inputs when omitted")
      ->check(CLI::IsMember({0, 1, 2}));
  cmd->add_flag("--pretty", c.pretty, "Human-readable output instead of JSON");
  cmd->add_option("--div-budget", c.div_budget, "Quotient term budget for d=2 division")->check(CLI::PositiveNumber);
  cmd->add_option("--n-max", c.n_max, "Bound for witness escalation and search")->check(CLI::PositiveNumber);
}

int resolve_dim(const Common& c, std::initializer_list<const std::string*> texts) {
  if (c.dim) return c.dim;
  int dim = 1;
  for (const auto* t : texts) dim = std::max(dim, infer_dim(*t));
  return dim;
}

ModelConfig model(const Common& c, int dim) {
  ModelConfig cfg;
  cfg.dim = dim;
  cfg.div_budget = c.div_budget;
  cfg.search_n_max = c.n_max;
  cfg.validate();
  return cfg;
}

bool is_element(const Json& j) { return j.is_object() && j.size() == 1 && j.contains("terms"); }

// Elements render as text; objects as "key: value" rows; arrays one row each.
void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [&](const Json& v) -> std::string {
    if (is_element(v)) return format_element(json::element_from_json(v));
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto simple = [&](const Json& v) { return is_element(v) || !v.is_structured() || v.empty(); };
  if (j.is_object() && !is_element(j)) {
    for (const auto& [key, value] : j.items()) {
      if (simple(value)) {
        out << pad << key << ": " << scalar(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      if (simple(value)) {
        out << pad << "[" << i++ << "] " << scalar(value) << "\n";
      } else {
        out << pad << "[" << i++ << "]\n";
        render(value, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Json& j, bool pretty, std::ostream& out) {
  if (pretty)
    render(j, out, 0);
  else
    out << j.dump() << "\n";
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "less";
    case Ordering::Equal:
      return "equal";
    case Ordering::Greater:
      return "greater";
  }
  return "";
}

Json error_json(const char* type, const std::string& message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic and equivalence certificates for a nonstandard model of weak arithmetic",
               "nsarith"};
  app.require_subcommand(1);
  Common common;
  int code = kOk;
  std::function<void()> action;
  bool pretty_requested = false;

  // eval
  std::string expr;
  auto* eval = app.add_subcommand("eval", "Parse and normalize an element");
  eval->add_option("expr", expr)->required();
  add_common(eval, common);
  eval->callback([&] {
    action = [&] {
      const int dim = resolve_dim(common, {&expr});
      const Element e = parse_element(expr, dim);
      Json j{{"element", json::to_json(e)},
             {"text", format_element(e)},
             {"dim", dim},
             {"standard", e.is_standard()},
             {"deg", e.deg() ? json::to_json(*e.deg()) : Json(nullptr)}};
      emit(j, common.pretty, out);
    };
  });

  // cmp
  std::string lhs, rhs;
  auto* cmpc = app.add_subcommand("cmp", "Compare two elements");
  cmpc->add_option("a", lhs)->required();
  cmpc->add_option("b", rhs)->required();
  add_common(cmpc, common);
  cmpc->callback([&] {
    action = [&] {
      const int dim = resolve_dim(common, {&lhs, &rhs});
      const Ordering o = cmp(parse_element(lhs, dim), parse_element(rhs, dim));
      emit(Json{{"cmp", ordering_name(o)}}, common.pretty, out);
    };
  });

  // arith
  auto* arith = app.add_subcommand("arith", "Model arithmetic");
  arith->require_subcommand(1);
  std::string op;
  for (const char* name : {"add", "mul", "sub", "divmod"}) {
    auto* sub = arith->add_subcommand(name, std::string("Element ") + name);
    sub->add_option("a", lhs)->required();
    sub->add_option("b", rhs)->required();
    add_common(sub, common);
    sub->callback([&, name] {
      op = name;
      action = [&] {
        const int dim = resolve_dim(common, {&lhs, &rhs});
        const ModelConfig cfg = model(common, dim);
        const Element a = parse_element(lhs, dim), b = parse_element(rhs, dim);
        Json j{{"op", op}};
        if (op == "add") {
          j["result"] = json::to_json(a + b);
        } else if (op == "mul") {
          j["result"] = json::to_json(a * b);
        } else if (op == "sub") {
          j["result"] = json::to_json(a - b);
        } else {
          if (b.is_zero()) throw PreconditionError("divisor must be positive");
          const Division d = divmod(a, b, cfg);
          j["quotient"] = json::to_json(d.quotient);
          j["remainder"] = json::to_json(d.remainder);
        }
        emit(j, common.pretty, out);
      };
    });
  }
  unsigned long power = 0;
  for (const char* name : {"pow", "root"}) {
    auto* sub = arith->add_subcommand(name, name == std::string("pow") ? "a^n" : "Largest m with m^k <= a");
    sub->add_option("a", lhs)->required();
    sub->add_option(name == std::string("pow") ? "n" : "k", power)->required();
    add_common(sub, common);
    sub->callback([&, name] {
      op = name;
      action = [&] {
        const int dim = resolve_dim(common, {&lhs});
        const ModelConfig cfg = model(common, dim);
        const Element a = parse_element(lhs, dim);
        Json j{{"op", op}};
        if (op == "pow") {
          j["result"] = json::to_json(pow(a, power));
        } else {
          if (power < 1) throw PreconditionError("root degree must be >= 1");
          if (a < Element::one(dim)) throw PreconditionError("root_floor requires a >= 1");
          j["result"] = json::to_json(root_floor(a, power, cfg));
        }
        emit(j, common.pretty, out);
      };
    });
  }

  // equiv
  int level = 0;
  auto* eq = app.add_subcommand("equiv", "Decide E^level with a certified witness");
  eq->add_option("--level", level, "0..4")->required()->check(CLI::Range(0, 4));
  eq->add_option("a", lhs)->required();
  eq->add_option("b", rhs)->required();
  add_common(eq, common);
  eq->callback([&] {
    action = [&] {
      const int dim = resolve_dim(common, {&lhs, &rhs});
      const Verdict v = equiv::decide(level, parse_element(lhs, dim), parse_element(rhs, dim), model(common, dim));
      emit(json::to_json(v), common.pretty, out);
      if (!v.equivalent) code = kNegative;
    };
  });

  // auto
  auto* au = app.add_subcommand("auto", "Build an order-automorphism moving one element to another");
  au->add_option("--from", lhs)->required();
  au->add_option("--to", rhs)->required();
  add_common(au, common);
  au->callback([&] {
    action = [&] {
      const int dim = resolve_dim(common, {&lhs, &rhs});
      const ModelConfig cfg = model(common, dim);
      const Element a = parse_element(lhs, dim), b = parse_element(rhs, dim);
      const bool e2 = equiv::decide(2, a, b, cfg).equivalent;
      const automorph::Descriptor d = equiv::prove_e5(a, b, cfg);
      emit(Json{{"route", e2 ? "e2" : "e3"}, {"dim", dim}, {"descriptor", json::to_json(d)}}, common.pretty, out);
    };
  });

  // apply
  std::string desc_path;
  bool inverse = false;
  auto* ap = app.add_subcommand("apply", "Evaluate a descriptor at an element");
  ap->add_option("--desc", desc_path, "Descriptor JSON file (the output of auto, or its descriptor field)")
      ->required()
      ->check(CLI::ExistingFile);
  ap->add_flag("--inverse", inverse, "Evaluate the inverse map");
  ap->add_option("x", lhs)->required();
  add_common(ap, common);
  ap->callback([&] {
    action = [&] {
      std::ifstream in(desc_path);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, "JSON document");
      }
      if (doc.contains("descriptor")) doc = doc.at("descriptor");
      int dim = common.dim ? common.dim : json::infer_json_dim(doc);
      if (!dim) dim = resolve_dim(common, {&lhs});
      const automorph::Descriptor d = json::descriptor_from_json(doc, dim);
      const Element x = parse_element(lhs, dim);
      const Element y = inverse ? automorph::apply_inverse(d, x) : automorph::apply(d, x);
      emit(Json{{"x", json::to_json(x)}, {"image", json::to_json(y)}}, common.pretty, out);
    };
  });

  // seq
  std::size_t count = 5;
  std::string direction = "up";
  auto* sq = app.add_subcommand("seq", "Class sequences");
  sq->require_subcommand(1);
  for (const char* name : {"e0", "e2", "b11"}) {
    auto* sub = sq->add_subcommand(name, std::string(name) + " sequence");
    sub->add_option("a", lhs)->required();
    sub->add_option("-k,--count", count, "Number of terms")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    sub->add_option("--direction", direction)->check(CLI::IsMember({"up", "down"}));
    add_common(sub, common);
    sub->callback([&, name] {
      op = name;
      action = [&] {
        const int dim = resolve_dim(common, {&lhs});
        const ModelConfig cfg = model(common, dim);
        const Element a = parse_element(lhs, dim);
        const auto dir = analysis::parse_direction(direction);
        analysis::ClassSequence seq;
        if (op == "e0")
          seq = analysis::e0_seq(a, count, dir);
        else if (op == "e2")
          seq = analysis::e2_seq(a, count, dir);
        else
          seq = analysis::b11_seq(a, std::min<std::size_t>(count, 16), dir, cfg);
        Json j{{"kind", op}};
        j.update(json::to_json(seq));
        if (op == "b11") {
          Json certified = Json::array();
          bool all = true;
          for (std::size_t i = 0; i < seq.terms.size(); ++i) {
            const bool c = analysis::b11_certify(seq, i, a, cfg);
            all = all && c;
            certified.push_back(c);
          }
          j["certified"] = std::move(certified);
          if (!all) code = kNegative;
        }
        emit(j, common.pretty, out);
      };
    });
  }

  // embed
  auto* em = app.add_subcommand("embed", "Embed an element's E3-class into the rationals");
  em->add_option("--anchor", lhs)->required();
  em->add_option("b", rhs)->required();
  add_common(em, common);
  em->callback([&] {
    action = [&] {
      const int dim = resolve_dim(common, {&lhs, &rhs});
      const auto e = analysis::real_embed(parse_element(lhs, dim), parse_element(rhs, dim), model(common, dim));
      emit(json::to_json(e), common.pretty, out);
    };
  });

  // suite
  suite::SuiteOptions sopt;
  auto* su = app.add_subcommand("suite", "Run a property suite");
  su->add_option("--name", sopt.name, "Suite name or 'all'")->required();
  su->add_option("--samples", sopt.samples)->check(CLI::PositiveNumber);
  su->add_option("--seed", sopt.seed);
  su->add_option("--probes", sopt.probes, "Probes per descriptor (automorph suite)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  add_common(su, common);
  su->callback([&] {
    action = [&] {
      sopt.dim = common.dim ? common.dim : 1;
      sopt.model = model(common, sopt.dim);
      const auto report = suite::run_suite(sopt);
      emit(report.json, common.pretty, out);
      if (!report.ok()) code = kNegative;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  pretty_requested = common.pretty;

  try {
    action();
    return code;
  } catch (const PartialityError& e) {
    emit(error_json(dynamic_cast<const NonTerminatingQuotient*>(&e) ? "NonTerminatingQuotient"
                                                                   : "CoefficientNotRepresentable",
                    e.what()),
         pretty_requested, out);
    err << "nsarith: " << e.what() << "\n";
    return kPartial;
  } catch (const NegativeResult& e) {
    const char* type = dynamic_cast<const NotEquivalent*>(&e)   ? "NotEquivalent"
                       : dynamic_cast<const CannotProve*>(&e)   ? "CannotProve"
                                                                : "ValidationFailure";
    emit(error_json(type, e.what()), pretty_requested, out);
    err << "nsarith: " << e.what() << "\n";
    return kNegative;
  } catch (const ParseError& e) {
    Json j = error_json("ParseError", e.what());
    j["error"]["position"] = e.position();
    j["error"]["expected"] = e.expected();
    emit(j, pretty_requested, out);
    err << "nsarith: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    const char* type = dynamic_cast<const StandardInput*>(&e)          ? "StandardInput"
                       : dynamic_cast<const PreconditionError*>(&e)    ? "PreconditionError"
                       : dynamic_cast<const InvariantViolation*>(&e)   ? "InvariantViolation"
                       : dynamic_cast<const Underflow*>(&e)            ? "Underflow"
                                                                       : "Error";
    emit(error_json(type, e.what()), pretty_requested, out);
    err << "nsarith: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    emit(error_json("ParseError", e.what()), pretty_requested, out);
    err << "nsarith: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace nsarith::cli
