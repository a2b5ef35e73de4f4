#include "pbz/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "pbz/analysis.hpp"
#include "pbz/classify.hpp"
#include "pbz/constructors.hpp"
#include "pbz/equivalences.hpp"
#include "pbz/facts.hpp"
#include "pbz/format.hpp"
#include "pbz/terms.hpp"

namespace pbz {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

Law law_argument(const FiniteAlgebra& algebra, const std::string& text) {
  for (const auto& l : named_laws()) {
    if (l.name == text) return l.law;
  }
  return parse_law(text, algebra.signature());
}

std::string assignment(const FiniteAlgebra& a, const std::vector<Element>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << variable_name(i) << '=' << a.label(v[i]);
  }
  return out.str();
}

void print_report(std::ostream& out, const FiniteAlgebra& a,
                  const ClassificationReport& r) {
  for (const auto& c : r.classes) {
    out << c.name << ": " << to_string(c.verdict);
    if (c.witness) {
      out << " (" << c.witness->condition;
      if (!c.witness->assignment.empty()) out << " at " << describe(a, *c.witness);
      out << ')';
    }
    out << '\n';
  }
}

std::optional<Signature> signature_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_signature(text);
}

}  // namespace

FiniteAlgebra resolve_algebra(const std::string& arg) {
  for (const auto& e : catalog_entries()) {
    if (e.name == arg) return e.algebra;
  }
  if (std::filesystem::is_regular_file(arg)) return load_algebra(arg);
  throw UnknownName("no catalog algebra or file named '" + arg + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite-model workbench for BI-, BZ- and PBZ*-lattices, "
               "quasi-Stone and diamond-De Morgan algebras.",
               "pbz"};
  app.require_subcommand(1, 1);

  std::string first;
  std::string second;
  std::string sig_text;
  std::string fact_id;
  std::vector<std::string> law_parts;
  bool constants_singleton = false;
  bool to_modal = false;
  bool to_bz = false;
  std::function<int()> action;

  auto algebra_arg = [&](CLI::App* cmd, std::string& slot, const char* name) {
    cmd->add_option(name, slot, "catalog name or algebra file")->required();
  };
  auto sig_opt = [&](CLI::App* cmd) {
    cmd->add_option("--sig", sig_text,
                    "signature: LAT, I, BI, BZ or MODAL (default: the first "
                    "algebra's)");
  };

  auto* c_catalog = app.add_subcommand("catalog", "list the built-in algebras");
  c_catalog->callback([&] {
    action = [&] {
      for (const auto& e : catalog_entries()) {
        out << e.name << "  " << e.algebra.size() << "  "
            << to_string(e.algebra.signature()) << "  " << e.provenance
            << '\n';
      }
      return 0;
    };
  });

  auto* c_show = app.add_subcommand("show", "print an algebra in file format");
  algebra_arg(c_show, first, "algebra");
  c_show->callback([&] {
    action = [&] {
      out << format_algebra(resolve_algebra(first));
      return 0;
    };
  });

  auto* c_check = app.add_subcommand(
      "check", "check a named law or an (quasi)equation exhaustively");
  algebra_arg(c_check, first, "algebra");
  c_check->add_option("law", law_parts, "law name or text")->required();
  c_check->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const CheckResult r = check(a, law_argument(a, join(law_parts)));
      if (r.holds()) {
        out << "holds\n";
        return 0;
      }
      const auto& c = *r.counterexample;
      out << "counterexample: " << assignment(a, c.assignment) << "; lhs = "
          << a.label(c.lhs) << ", rhs = " << a.label(c.rhs) << '\n';
      return 1;
    };
  });

  auto* c_classify = app.add_subcommand("classify", "lattice and BZ classes");
  algebra_arg(c_classify, first, "algebra");
  c_classify->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      print_report(out, a, classify(a));
      return 0;
    };
  });

  auto* c_stone =
      app.add_subcommand("classify-stone", "quasi-Stone classes of a BZ-algebra");
  algebra_arg(c_stone, first, "algebra");
  c_stone->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      print_report(out, a, classify_stone(a));
      return 0;
    };
  });

  auto* c_modal = app.add_subcommand("classify-modal",
                                     "diamond-De Morgan classes of a MODAL algebra");
  algebra_arg(c_modal, first, "algebra");
  c_modal->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const ModalClassReport r = classify_modal(a);
      for (const auto& c : r.classes) {
        out << c.name << ": " << (c.holds ? "holds" : "fails");
        if (c.witness) out << " (" << describe(a, *c.witness) << ')';
        out << '\n';
      }
      return 0;
    };
  });

  auto* c_embed = app.add_subcommand("embed", "search for an embedding");
  algebra_arg(c_embed, first, "pattern");
  algebra_arg(c_embed, second, "target");
  sig_opt(c_embed);
  c_embed->callback([&] {
    action = [&] {
      const FiniteAlgebra p = resolve_algebra(first);
      const FiniteAlgebra t = resolve_algebra(second);
      const Signature sig = signature_option(sig_text).value_or(p.signature());
      if (auto m = find_embedding(p, t, sig)) {
        out << "embedding: " << describe(p, t, *m) << '\n';
        return 0;
      }
      out << "no embedding\n";
      return 1;
    };
  });

  auto* c_iso = app.add_subcommand("iso", "search for an isomorphism");
  algebra_arg(c_iso, first, "a");
  algebra_arg(c_iso, second, "b");
  sig_opt(c_iso);
  c_iso->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const FiniteAlgebra b = resolve_algebra(second);
      const Signature sig = signature_option(sig_text).value_or(a.signature());
      if (auto m = find_isomorphism(a, b, sig)) {
        out << "isomorphism: " << describe(a, b, *m) << '\n';
        return 0;
      }
      out << "not isomorphic\n";
      return 1;
    };
  });

  auto* c_con = app.add_subcommand("con", "congruence lattice");
  algebra_arg(c_con, first, "algebra");
  sig_opt(c_con);
  c_con->add_flag("--constants-singleton", constants_singleton,
                  "only congruences whose 0 and 1 classes are singletons");
  c_con->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const Signature sig = signature_option(sig_text).value_or(a.signature());
      const auto all = all_congruences(a, sig);
      std::size_t shown = 0;
      std::ostringstream lines;
      for (const auto& c : all) {
        if (constants_singleton && !c.constants_singleton) continue;
        ++shown;
        lines << format_partition(a, c.partition)
              << (c.constants_singleton ? "  [0,1 singleton]" : "") << '\n';
      }
      out << "congruences: " << shown << '\n' << lines.str();
      const auto mono = monolith(a, sig);
      out << "size: " << a.size() << '\n';
      out << "monolith: " << (mono ? format_partition(a, *mono) : "none")
          << '\n';
      out << "subdirectly irreducible: "
          << (is_subdirectly_irreducible(a, sig) ? "yes" : "no") << '\n';
      return 0;
    };
  });

  auto* c_quotient = app.add_subcommand("quotient", "quotient by a partition");
  algebra_arg(c_quotient, first, "algebra");
  c_quotient->add_option("partition", second, "blocks like 0;a,b;1")
      ->required();
  sig_opt(c_quotient);
  c_quotient->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const Signature sig = signature_option(sig_text).value_or(a.signature());
      out << format_algebra(quotient(a, parse_partition(a, second), sig));
      return 0;
    };
  });

  using Binary = FiniteAlgebra (*)(const FiniteAlgebra&, const FiniteAlgebra&);
  auto binary = [&](const char* name, const char* help, Binary f) {
    auto* cmd = app.add_subcommand(name, help);
    algebra_arg(cmd, first, "left");
    algebra_arg(cmd, second, "right");
    cmd->callback([&, f] {
      action = [&, f] {
        out << format_algebra(f(resolve_algebra(first), resolve_algebra(second)));
        return 0;
      };
    });
  };
  binary("product", "direct product", &direct_product);
  binary("osum", "ordinal sum", &ordinal_sum);
  binary("symext", "L + K + L^d with the induced involution",
         &symmetric_extension);

  auto* c_translate = app.add_subcommand(
      "translate", "weak Lukasiewicz algebra <-> distributive PBZ*-lattice");
  algebra_arg(c_translate, first, "algebra");
  auto* o_modal = c_translate->add_flag("--to-modal", to_modal, "dia x = x~~");
  auto* o_bz = c_translate->add_flag("--to-bz", to_bz, "x~ = (dia x)'");
  o_modal->excludes(o_bz);
  c_translate->callback([&] {
    if (!to_modal && !to_bz) {
      throw CLI::RequiredError("--to-modal or --to-bz");
    }
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      out << format_algebra(to_modal ? modal_of_bz(a) : bz_of_modal(a));
      return 0;
    };
  });

  auto* c_disc = app.add_subcommand("discriminator",
                                    "tables of the terms e and t on a BZ-algebra");
  algebra_arg(c_disc, first, "algebra");
  c_disc->callback([&] {
    action = [&] {
      const FiniteAlgebra a = resolve_algebra(first);
      const DiscriminatorReport r = verify_discriminator(a);
      const std::size_t n = a.size();
      out << "e";
      for (Element y = 0; y < n; ++y) out << ' ' << a.label(y);
      out << '\n';
      for (Element x = 0; x < n; ++x) {
        out << a.label(x);
        for (Element y = 0; y < n; ++y) out << ' ' << a.label(r.e[x * n + y]);
        out << '\n';
      }
      out << "e separates: " << (r.e_separates ? "yes" : "no") << '\n';
      out << "t is a discriminator: " << (r.realises ? "yes" : "no");
      if (r.first_failure) {
        const auto& f = *r.first_failure;
        out << " (t(" << a.label(f[0]) << ',' << a.label(f[1]) << ','
            << a.label(f[2])
            << ") = " << a.label(r.t[(f[0] * n + f[1]) * n + f[2]]) << ')';
      }
      out << '\n';
      return r.realises ? 0 : 1;
    };
  });

  auto* c_facts = app.add_subcommand(
      "verify-facts", "run the registered finite-instance facts");
  c_facts->add_option("--fact", fact_id, "run one fact by id");
  c_facts->callback([&] {
    action = [&] { return report_facts(out, fact_id) == 0 ? 0 : 1; };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* sub = app.get_subcommands().empty()
                              ? &app
                              : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    return action();
  } catch (const NotACongruence& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const NotWeakLukasiewicz& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const NotDistributivePBZ& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const NotDeMorgan& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const PreconditionFailed& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const NotQuasiStone& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pbz
