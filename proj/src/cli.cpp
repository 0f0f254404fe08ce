#include "goldman/cli.hpp"

#include "goldman/chain.hpp"
#include "goldman/ideals_int.hpp"
#include "goldman/ideals_rat.hpp"
#include "goldman/io.hpp"
#include "goldman/liealg.hpp"
#include "goldman/properties.hpp"
#include "goldman/symplectic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

namespace goldman {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceFlags {
  std::optional<unsigned> closed;
  std::vector<unsigned> boundary;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--closed", closed, "closed surface of genus g");
    auto* b = cmd->add_option("--boundary", boundary, "genus g and b boundary components")
                  ->expected(2);
    c->excludes(b);
  }

  bool given() const { return closed.has_value() || !boundary.empty(); }

  SurfaceSignature get() const {
    try {
      if (closed) {
        return SurfaceSignature::closed(*closed);
      }
      if (boundary.size() == 2) {
        return SurfaceSignature::with_boundary(boundary[0], boundary[1]);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    throw UsageError("this command needs --closed <g> or --boundary <g> <b>");
  }
};

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    return v.is_primitive() ||
           (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
              return x.is_primitive();
            }));
  };
  auto line = [&](const Json& v) {
    if (v.is_primitive()) {
      return scalar(v);
    }
    std::string s;
    for (const Json& x : v) {
      s += (s.empty() ? "" : ", ") + scalar(x);
    }
    return "[" + s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v)) {
        out << indent << k << ": " << line(v) << '\n';
      } else {
        out << indent << k << ":\n";
        render_text(v, out, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (flat(v)) {
        out << indent << "- " << line(v) << '\n';
      } else {
        out << indent << "-\n";
        render_text(v, out, indent + "  ");
      }
    }
  } else {
    out << indent << scalar(j) << '\n';
  }
}

// Parses "a1 a2^3" or an element JSON object.
template <Coefficient Coef>
ModuleElement<Coef> element_argument(const std::string& text, std::size_t n) {
  if (!text.empty() && text.front() == '{') {
    Json j = parse_json_text(text);
    if constexpr (std::is_same_v<Coef, Integer>) {
      return parse_int_element_json(j, n);
    } else {
      return parse_rat_element_json(j, n);
    }
  }
  return ModuleElement<Coef>::term(re(parse_word(text, n), n));
}

bool is_json_object(const std::string& s) { return !s.empty() && s.front() == '{'; }

std::size_t infer_rank(std::initializer_list<const std::vector<Letter>*> words, std::size_t c,
                       std::optional<std::size_t> rank) {
  std::size_t r = c;
  for (const auto* ls : words) {
    for (const Letter& l : *ls) {
      r = std::max(r, l.gen);
    }
  }
  if (rank) {
    if (*rank < r) {
      throw UsageError("--rank " + std::to_string(*rank) + " is smaller than the generators used");
    }
    return *rank;
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelianized Goldman Lie algebra toolkit", "goldman"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // Each subcommand stores its action here; run after parsing succeeds.
  std::function<int(Json&)> action;
  auto add = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    return cmd;
  };

  // bracket
  SurfaceFlags br_sf;
  std::string br_u, br_v;
  {
    CLI::App* cmd = add("bracket", "Lie bracket of two words or element JSONs");
    br_sf.attach(cmd);
    cmd->add_option("u", br_u)->required();
    cmd->add_option("v", br_v)->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = br_sf.get();
        const std::size_t n = sig.n();
        const bool rational = (is_json_object(br_u) && parse_json_text(br_u).value("ring", "") == "Q") ||
                              (is_json_object(br_v) && parse_json_text(br_v).value("ring", "") == "Q");
        if (rational) {
          result = element_json(bracket(sig, element_argument<Rational>(br_u, n),
                                        element_argument<Rational>(br_v, n)));
        } else {
          result = element_json(bracket(sig, element_argument<Integer>(br_u, n),
                                        element_argument<Integer>(br_v, n)));
        }
        return kExitOk;
      };
    });
  }

  // ab
  SurfaceFlags ab_sf;
  std::optional<std::size_t> ab_n;
  std::vector<std::string> ab_terms;
  std::string ab_ring;
  {
    CLI::App* cmd = add("ab", "abelianize a formal sum of words");
    ab_sf.attach(cmd);
    cmd->add_option("--n", ab_n, "alphabet size, instead of surface flags");
    cmd->add_option("--ring", ab_ring)->check(CLI::IsMember({"Z", "Q"}));
    cmd->add_option("--term", ab_terms, "coef:word, e.g. \"3:a1 a2^-1\"")->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        if (ab_n && ab_sf.given()) {
          throw UsageError("give either --n or surface flags, not both");
        }
        const std::size_t n = ab_n ? *ab_n : ab_sf.get().n();
        bool rational = ab_ring == "Q";
        std::vector<std::pair<std::string, Word>> parsed;
        for (const std::string& t : ab_terms) {
          std::size_t colon = t.find(':');
          if (colon == std::string::npos) {
            throw ParseError("term '" + t + "' is not coef:word");
          }
          std::string coef = t.substr(0, colon);
          if (coef.find('/') != std::string::npos) {
            if (ab_ring == "Z") {
              throw ParseError("fractional coefficient '" + coef + "' with --ring Z");
            }
            rational = true;
          }
          parsed.emplace_back(coef, parse_word(t.substr(colon + 1), n));
        }
        auto run = [&]<Coefficient Coef>(std::type_identity<Coef>) {
          std::vector<WordTerm<Coef>> sum;
          for (const auto& [coef, w] : parsed) {
            Coef c;
            try {
              if constexpr (std::is_same_v<Coef, Integer>) {
                c = parse_integer(coef);
              } else {
                c = parse_rational(coef);
              }
            } catch (const std::invalid_argument&) {
              throw ParseError("invalid coefficient '" + coef + "'");
            }
            sum.push_back({c, w});
          }
          result = element_json(ab<Coef>(sum, n));
        };
        if (rational) {
          run(std::type_identity<Rational>{});
        } else {
          run(std::type_identity<Integer>{});
        }
        return kExitOk;
      };
    });
  }

  // pair
  SurfaceFlags pr_sf;
  std::string pr_u, pr_v;
  {
    CLI::App* cmd = add("pair", "intersection pairing <re(u), re(v)>");
    pr_sf.attach(cmd);
    cmd->add_option("u", pr_u)->required();
    cmd->add_option("v", pr_v)->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = pr_sf.get();
        result["value"] = to_string(
            intersection_pairing(sig, parse_word(pr_u, sig.n()), parse_word(pr_v, sig.n())));
        return kExitOk;
      };
    });
  }

  // center
  SurfaceFlags ce_sf;
  {
    CLI::App* cmd = add("center", "generators of the center");
    ce_sf.attach(cmd);
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = ce_sf.get();
        Json gens = Json::array();
        for (std::size_t j = 2 * std::size_t{sig.genus()} + 1; j <= sig.n(); ++j) {
          gens.push_back("a" + std::to_string(j));
        }
        result["generators"] = std::move(gens);
        return kExitOk;
      };
    });
  }

  // ideal-check
  SurfaceFlags ic_sf;
  std::string ic_rule = "ik", ic_k = "[]", ic_table, ic_criterion = "closure";
  long ic_box = 10;
  std::uint64_t ic_samples = 10000;
  std::optional<std::uint64_t> ic_seed;
  bool ic_exhaustive = false;
  {
    CLI::App* cmd = add("ideal-check", "check the ideal criterion for a geometric submodule");
    ic_sf.attach(cmd);
    cmd->add_option("--rule", ic_rule)->check(CLI::IsMember({"ik", "table"}))->capture_default_str();
    cmd->add_option("--K", ic_k, "exception set for --rule ik, e.g. \"[(1,0)]\"");
    cmd->add_option("--table", ic_table, "table rule JSON for --rule table");
    cmd->add_option("--box", ic_box, "box radius")->check(CLI::NonNegativeNumber);
    cmd->add_option("--samples", ic_samples)->capture_default_str();
    cmd->add_option("--seed", ic_seed);
    cmd->add_flag("--exhaustive", ic_exhaustive, "check every pair in the box");
    cmd->add_option("--criterion", ic_criterion)
        ->check(CLI::IsMember({"closure", "divisibility"}))
        ->capture_default_str();
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = ic_sf.get();
        std::optional<GeometricSubmodule> sub;
        if (ic_rule == "ik") {
          sub = GeometricSubmodule::ik(sig.n(), parse_tuple_set(ic_k, sig.n()));
        } else {
          if (ic_table.empty()) {
            throw UsageError("--rule table needs --table '<json>'");
          }
          sub = parse_table_rule_json(parse_json_text(ic_table), sig.n());
        }
        const ExponentBox box{sig.n(), ic_box};
        if (!sub->domain_contains(box)) {
          throw UsageError("--box exceeds the table's box");
        }
        const bool closure = ic_criterion == "closure";
        IdealCheckReport report;
        if (ic_exhaustive) {
          report = closure ? ideal_check_exhaustive(sig, *sub, box)
                         : prop_divisibility_exhaustive(sig, *sub, box);
        } else {
          if (!ic_seed) {
            throw UsageError("sampled checks need an explicit --seed");
          }
          report = closure ? ideal_check_sampled(sig, *sub, box, ic_samples, *ic_seed)
                         : prop_divisibility_check(sig, *sub, box, ic_samples, *ic_seed);
        }
        result = closure ? report_json(report, "v", "w") : report_json(report, "k", "i");
        if (ic_exhaustive) {
          result.erase("seed");
        }
        return report.verdict ? kExitOk : kExitFalse;
      };
    });
  }

  // ik-family
  SurfaceFlags ik_sf;
  std::string ik_k0 = "[]";
  std::size_t ik_count = 1;
  {
    CLI::App* cmd = add("ik-family", "distinct ideals I_{K_0} < I_{K_1} < ...");
    ik_sf.attach(cmd);
    cmd->add_option("--K0", ik_k0)->capture_default_str();
    cmd->add_option("--count", ik_count)->check(CLI::PositiveNumber)->capture_default_str();
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = ik_sf.get();
        const std::size_t n = sig.n();
        Json family = Json::array();
        for (const GeometricSubmodule& s : ik_family(n, parse_tuple_set(ik_k0, n), ik_count)) {
          Json k = Json::array();
          for (const Monomial& x : std::get<IKRule>(s.rule()).exceptions) {
            k.push_back(monomial_json(x));
          }
          Json entry;
          entry["K"] = std::move(k);
          family.push_back(std::move(entry));
        }
        result["family"] = std::move(family);
        return kExitOk;
      };
    });
  }

  // ideal-closure
  SurfaceFlags cl_sf;
  std::vector<std::string> cl_gens;
  {
    CLI::App* cmd = add("ideal-closure", "smallest ideal of Q[A(n)] containing the generators");
    cl_sf.attach(cmd);
    cmd->add_option("--gen", cl_gens, "element JSON (repeatable)");
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = cl_sf.get();
        std::vector<RatElement> gens;
        for (const std::string& g : cl_gens) {
          gens.push_back(parse_rat_element_json(parse_json_text(g), sig.n()));
        }
        result = ideal_json(ideal_closure(sig, gens));
        return kExitOk;
      };
    });
  }

  // ideal-member
  SurfaceFlags mb_sf;
  std::string mb_ideal, mb_elem;
  {
    CLI::App* cmd = add("ideal-member", "membership of an element in an ideal");
    mb_sf.attach(cmd);
    cmd->add_option("--ideal", mb_ideal, "ideal JSON")->required();
    cmd->add_option("--elem", mb_elem, "element JSON")->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        const SurfaceSignature sig = mb_sf.get();
        RationalIdeal ideal = parse_ideal_json(sig, parse_json_text(mb_ideal));
        const bool in = contains(ideal, parse_rat_element_json(parse_json_text(mb_elem), sig.n()));
        result["verdict"] = in;
        return in ? kExitOk : kExitFalse;
      };
    });
  }

  // chain-project
  unsigned long cp_level = 0;
  std::size_t cp_c = 1;
  std::optional<std::size_t> cp_rank;
  std::string cp_word;
  {
    CLI::App* cmd = add("chain-project", "normal form of a word in G_n");
    cmd->add_option("--n", cp_level, "level")->required();
    cmd->add_option("--c", cp_c, "index of the distinguished generator")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rank", cp_rank, "alphabet size (default: largest generator used)");
    cmd->add_option("word", cp_word)->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        std::vector<Letter> ls = parse_letters(cp_word);
        const std::size_t rank = infer_rank({&ls}, cp_c, cp_rank);
        result["word"] = format_letters(
            project_gn(Word::reduce(rank, ls), cp_level, cp_c).letters());
        return kExitOk;
      };
    });
  }

  // chain-separate
  std::size_t cs_c = 1;
  unsigned long cs_nmax = 12;
  std::optional<std::size_t> cs_rank;
  std::string cs_a, cs_b;
  {
    CLI::App* cmd = add("chain-separate", "least level at which two words stop being conjugate");
    cmd->add_option("--c", cs_c)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--nmax", cs_nmax)->capture_default_str();
    cmd->add_option("--rank", cs_rank);
    cmd->add_option("a", cs_a)->required();
    cmd->add_option("b", cs_b)->required();
    cmd->callback([&] {
      action = [&](Json& result) {
        std::vector<Letter> la = parse_letters(cs_a);
        std::vector<Letter> lb = parse_letters(cs_b);
        const std::size_t rank = infer_rank({&la, &lb}, cs_c, cs_rank);
        const Word a = Word::reduce(rank, la);
        const Word b = Word::reduce(rank, lb);
        if (are_conjugate(a, b)) {
          result["result"] = "conjugate";
          return kExitFalse;
        }
        std::optional<unsigned long> level = separation_level(a, b, cs_c, cs_nmax);
        if (!level) {
          result["result"] = "not separated";
          return kExitFalse;
        }
        result["result"] = "separated";
        result["level"] = *level;
        return kExitOk;
      };
    });
  }

  // selftest
  std::optional<std::uint64_t> st_seed;
  double st_scale = 1.0;
  std::string st_fault;
  {
    CLI::App* cmd = add("selftest", "run every invariant suite");
    cmd->add_option("--seed", st_seed)->required();
    cmd->add_option("--scale", st_scale, "multiplier on every suite's case count")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    // Mutation hook: the suites must catch a corrupted pairing.
    cmd->add_option("--inject-fault", st_fault)
        ->check(CLI::IsMember({"pairing-sign"}))
        ->group("");
    cmd->callback([&] {
      action = [&](Json& result) {
        const Fault fault = st_fault.empty() ? Fault::none : Fault::pairing_sign;
        result = run_selftest(*st_seed, st_scale, fault);
        return result["verdict"].get<bool>() ? kExitOk : kExitFalse;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "goldman: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  Json result = Json::object();
  int code = kExitOk;
  try {
    code = action(result);
  } catch (const UsageError& e) {
    err << "goldman: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "goldman: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "goldman: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "goldman: " << e.what() << '\n';
    return kExitUsage;
  }
  if (format == "text") {
    render_text(result, out, "");
  } else {
    out << result.dump() << '\n';
  }
  return code;
}

}  // namespace goldman
