// rmzv: renormalized MZVs at non-positive arguments.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 the delta -> 0 limit
// has a pole, 3 a series was requested beyond its known precision,
// 4 a verification suite reported a failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmzv/errors.hpp"
#include "rmzv/mzv.hpp"
#include "rmzv/serialize.hpp"
#include "rmzv/verify.hpp"

using namespace rmzv;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kPole = 2, kPrecision = 3, kVerification = 4 };

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::int64_t> parse_exponents(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text)) {
    const auto q = BigRational::parse(item);
    if (!q.is_integer()) throw ParseError("exponent '" + item + "' is not an integer");
    out.push_back(q.numerator().get_si());
  }
  if (out.empty()) throw ParseError("empty exponent vector");
  return out;
}

bool mentions_delta(const std::string& text) {
  return text.find('d') != std::string::npos || text.find("\xCE\xB4") != std::string::npos;
}

template <class D>
std::vector<D> parse_directions(const std::string& text) {
  std::vector<D> out;
  for (const auto& item : split(text)) out.push_back(DirectionTraits<D>::parse(item));
  return out;
}

std::int64_t default_precision() {
  if (const char* env = std::getenv("RMZV_PRECISION")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("RMZV_PRECISION must be a positive integer");
  }
  return 6;
}

Json s_json(const std::vector<std::int64_t>& s) { return Json(s); }

template <class D>
Json r_json(const std::vector<D>& r) {
  Json out = Json::array();
  for (const auto& x : r) out.push_back(DirectionTraits<D>::to_string(x));
  return out;
}

struct Options {
  std::string s, r, word, format = "text", part = "both", suite = "all";
  bool as_float = false;
  std::optional<std::int64_t> prec;
  std::int64_t max_weight = 3, max_depth = 2, min_s = -2;
  std::uint64_t seed = 0;
};

int cmd_eval(const Options& o) {
  const auto s = parse_exponents(o.s);
  Json row{{"s", s_json(s)}};
  std::string text;
  if (o.r.empty()) {
    const auto v = renorm_mzv(s);
    row["r"] = "auto-delta";
    row["value"] = to_json(v);
    text = v.to_string();
    if (o.as_float) {
      std::ostringstream f;
      f.precision(17);
      f << v.to_double();
      row["float"] = v.to_double();
      text += " " + f.str();
    }
  } else if (mentions_delta(o.r)) {
    const auto r = parse_directions<DeltaRationalFunction>(o.r);
    // Directions depending on delta: report the delta -> 0+ limit.
    const auto v = renorm_directional<DeltaRationalFunction>(s, r).limit_at_zero();
    row["r"] = r_json(r);
    row["value"] = to_json(v);
    text = v.to_string();
  } else {
    const auto r = parse_directions<BigRational>(o.r);
    const auto v = renorm_directional<BigRational>(s, r);
    row["r"] = r_json(r);
    row["value"] = to_json(v);
    text = v.to_string();
    if (o.as_float) {
      std::ostringstream f;
      f.precision(17);
      f << v.to_double();
      row["float"] = v.to_double();
      text += " " + f.str();
    }
  }
  std::cout << (o.format == "json" ? row.dump() : text) << "\n";
  return kOk;
}

template <class D>
int directional_impl(const std::vector<std::int64_t>& s, const std::vector<D>& r, const std::string& format) {
  const auto v = renorm_directional<D>(s, r);
  if (format == "json")
    std::cout << Json{{"s", s_json(s)}, {"r", r_json(r)}, {"value", DirectionTraits<D>::to_string(v)}}.dump() << "\n";
  else
    std::cout << DirectionTraits<D>::to_string(v) << "\n";
  return kOk;
}

int cmd_directional(const Options& o) {
  if (!o.word.empty()) {
    if (mentions_delta(o.word)) {
      const auto arg = MZVArgument<DeltaRationalFunction>::from_word(parse_word<DeltaRationalFunction>(o.word));
      return directional_impl(arg.s, arg.r, o.format);
    }
    const auto arg = MZVArgument<BigRational>::from_word(parse_word<BigRational>(o.word));
    return directional_impl(arg.s, arg.r, o.format);
  }
  if (o.s.empty() || o.r.empty()) throw ParseError("directional needs --s and --r, or --word");
  const auto s = parse_exponents(o.s);
  if (mentions_delta(o.r)) return directional_impl(s, parse_directions<DeltaRationalFunction>(o.r), o.format);
  return directional_impl(s, parse_directions<BigRational>(o.r), o.format);
}

template <class D>
int series_impl(const MZVArgument<D>& arg, const Options& o) {
  const std::int64_t slots = o.prec ? *o.prec : default_precision();
  if (slots < 1) throw ParseError("--prec must be at least 1");
  const bool want_reg = o.part != "renormalized", want_ren = o.part != "regularized";
  std::optional<TruncatedLaurentSeries<D>> reg, ren;
  if (want_reg) reg = regularized_expansion(arg, slots - arg.pole_depth());
  if (want_ren) {
    DecompositionSession<D, D> session(mzv_character<D>());
    ren = session.plus(arg.word(), slots);
  }
  if (o.format == "json") {
    Json out{{"s", s_json(arg.s)}, {"r", r_json(arg.r)}};
    if (reg) out["regularized"] = to_json(*reg);
    if (ren) out["renormalized"] = to_json(*ren);
    std::cout << out.dump() << "\n";
  } else if (reg && ren) {
    std::cout << "regularized: " << to_text(*reg) << "\n" << "renormalized: " << to_text(*ren) << "\n";
  } else {
    std::cout << to_text(reg ? *reg : *ren) << "\n";
  }
  return kOk;
}

int cmd_series(const Options& o) {
  if (o.r.empty()) throw ParseError("series requires explicit --r");
  const auto s = parse_exponents(o.s);
  if (mentions_delta(o.r))
    return series_impl(MZVArgument<DeltaRationalFunction>(s, parse_directions<DeltaRationalFunction>(o.r)), o);
  return series_impl(MZVArgument<BigRational>(s, parse_directions<BigRational>(o.r)), o);
}

int cmd_verify(const Options& o) {
  const auto result = run_suite(o.suite, SuiteOptions{o.max_weight, o.seed});
  for (const auto& report : result.reports) std::cout << report.dump() << "\n";
  std::cout << Json{{"suite", o.suite},
                    {"checks", result.reports.size()},
                    {"failures", result.failures},
                    {"pass", result.pass()}}
                   .dump()
            << "\n";
  return result.pass() ? kOk : kVerification;
}

int cmd_table(const Options& o) {
  if (o.max_depth < 0) throw ParseError("--max-depth must be non-negative");
  if (o.min_s > 0) throw ParseError("--min-s must be non-positive");
  Json rows = Json::array();
  for (std::int64_t depth = 1; depth <= o.max_depth; ++depth) {
    std::vector<std::int64_t> s(static_cast<std::size_t>(depth), 0);
    while (true) {
      Json row{{"s", s_json(s)}, {"r", "auto-delta"}};
      try {
        row["value"] = to_json(renorm_mzv(s));
      } catch (const PoleAtZero& e) {
        row["error"] = e.what();
      }
      rows.push_back(std::move(row));
      // Next vector: the last entry runs 0, -1, ..., min_s fastest.
      auto i = s.size();
      while (i > 0 && s[i - 1] == o.min_s) s[--i] = 0;
      if (i == 0) break;
      --s[i - 1];
    }
  }
  std::cout << rows.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renormalized multiple zeta values at non-positive arguments"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "renormalized MZV; directions default to |s_i| + delta");
  eval->add_option("--s", o.s, "comma-separated exponents, each <= 0")->required();
  eval->add_option("--r", o.r, "comma-separated positive directions");
  eval->add_flag("--float", o.as_float, "also print a floating-point approximation");
  eval->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* directional = app.add_subcommand("directional", "renormalized directional MZV");
  directional->add_option("--s", o.s);
  directional->add_option("--r", o.r);
  directional->add_option("--word", o.word, "word such as (0,1)(-1,2)");
  directional->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* series = app.add_subcommand("series", "regularized and renormalized Laurent series");
  series->add_option("--s", o.s)->required();
  series->add_option("--r", o.r)->required();
  series->add_option("--prec", o.prec, "number of coefficients from the leading order (default $RMZV_PRECISION or 6)");
  series->add_option("--part", o.part)->check(CLI::IsMember({"regularized", "renormalized", "both"}));
  series->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a property suite and stream JSON reports");
  verify->add_option("--suite", o.suite);
  verify->add_option("--max-weight", o.max_weight);
  verify->add_option("--seed", o.seed);

  auto* table = app.add_subcommand("table", "JSON table of renormalized MZVs");
  table->add_option("--max-depth", o.max_depth);
  table->add_option("--min-s", o.min_s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*directional) return cmd_directional(o);
    if (*series) return cmd_series(o);
    if (*verify) return cmd_verify(o);
    if (*table) return cmd_table(o);
  } catch (const PoleAtZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPole;
  } catch (const InsufficientPrecision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecision;
  } catch (const IncompletePolePart& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecision;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
