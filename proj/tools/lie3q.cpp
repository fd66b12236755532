// lie3q: classify and construct three-dimensional simple Lie algebras over Q.
//
// Exit codes: 0 success, 1 domain-level negative (NotCartanType), 2 usage or
// parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "lie3q/report.hpp"

namespace {

using namespace lie3q;
using nlohmann::json;

std::string sym_text(Symbol s) {
  switch (s) {
    case Symbol::Minus: return "-1";
    case Symbol::Zero: return "0";
    case Symbol::Plus: return "+1";
  }
  return "?";
}

LieVec parse_vec3(const std::string& text) {
  std::vector<Rat> v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    v.push_back(Rat::parse(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != 3) throw Error(Errc::ParseError, "expected three comma-separated coordinates");
  return {v[0], v[1], v[2]};
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

json gram_json(const Mat3& g) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-dimensional simple Lie algebras over Q: splitness, obtainability, quaternion and Brauer data"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t max_bound = factor_bound();
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_option("--max-factor-bound", max_bound, "Largest |numerator| / denominator accepted for factorization");

  int exit_code = 0;
  std::function<void()> action;

  // classify
  std::string c_alpha, c_beta;
  auto* classify_cmd = app.add_subcommand("classify", "SPLIT | OBTAINABLE | UNOBTAINABLE for L(alpha,beta)");
  classify_cmd->add_option("alpha", c_alpha)->required();
  classify_cmd->add_option("beta", c_beta)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const Verdict v = classify(LParams(Rat::parse(c_alpha), Rat::parse(c_beta)));
      if (as_json) print_json(to_json(v));
      else render_text(std::cout, v);
    };
  });

  // construct
  std::string k_a;
  auto* construct_cmd = app.add_subcommand("construct", "Build l ⊕ λp from the reflection e -> a f, f -> e/a");
  construct_cmd->add_option("a", k_a)->required();
  construct_cmd->callback([&] {
    action = [&] {
      const Rat a = Rat::parse(k_a);
      if (a.is_zero()) throw Error(Errc::ZeroInput, "a must be nonzero");
      const ConstructOutcome out = run_construct(a);
      if (as_json) print_json(to_json(out));
      else render_text(std::cout, out);
      if (!out.cartan_type) exit_code = 1;
    };
  });

  // census
  long n_bound = 0;
  std::string n_path;
  unsigned n_jobs = 1;
  auto* census_cmd = app.add_subcommand("census", "Classify all integer pairs with |alpha|,|beta| <= BOUND into a CSV file");
  census_cmd->add_option("bound", n_bound)->required();
  census_cmd->add_option("-o,--output", n_path, "CSV output path")->required();
  census_cmd->add_option("--jobs", n_jobs, "Worker threads");
  census_cmd->callback([&] {
    action = [&] {
      const auto rows = census(n_bound, n_jobs);
      std::ofstream os(n_path);
      if (!os) throw std::runtime_error("IoError: cannot open " + n_path);
      write_census_csv(os, rows);
      if (!os) throw std::runtime_error("IoError: failed writing " + n_path);
      if (as_json) print_json({{"rows", rows.size()}, {"path", n_path}});
      else std::cout << rows.size() << " rows written to " << n_path << "\n";
    };
  });

  // hilbert / legendre
  std::string h_alpha, h_beta, h_place;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (alpha,beta)_v; place is inf or a prime");
  hilbert_cmd->add_option("alpha", h_alpha)->required();
  hilbert_cmd->add_option("beta", h_beta)->required();
  hilbert_cmd->add_option("place", h_place)->required();
  hilbert_cmd->callback([&] {
    action = [&] {
      const Symbol s = hilbert(Rat::parse(h_alpha), Rat::parse(h_beta), Place::parse(h_place));
      if (as_json) print_json({{"symbol", to_int(s)}});
      else std::cout << sym_text(s) << "\n";
    };
  });

  std::string l_a;
  std::uint64_t l_p = 0;
  auto* legendre_cmd = app.add_subcommand("legendre", "Legendre symbol (a/p) for an odd prime p");
  legendre_cmd->add_option("a", l_a)->required();
  legendre_cmd->add_option("p", l_p)->required();
  legendre_cmd->callback([&] {
    action = [&] {
      const Rat a = Rat::parse(l_a);
      if (!a.is_integer()) throw Error(Errc::ParseError, "legendre needs an integer argument");
      const Symbol s = legendre(a.num(), l_p);
      if (as_json) print_json({{"symbol", to_int(s)}});
      else std::cout << sym_text(s) << "\n";
    };
  });

  // qform
  auto* qform_cmd = app.add_subcommand("qform", "Diagonal quadratic forms given as comma-separated coefficients");
  qform_cmd->require_subcommand(1);
  std::string q_form, q_form2, q_value, q_place;
  auto emit_report = [&](bool verdict, const std::vector<Place>& failures) {
    if (as_json) print_json({{"verdict", verdict}, {"local_failures", places_json(failures)}});
    else {
      std::cout << (verdict ? "true" : "false") << "\n";
      if (!failures.empty()) std::cout << "local failures: " << join_places(failures, ", ") << "\n";
    }
  };
  auto* q_iso = qform_cmd->add_subcommand("isotropic", "Global isotropy (or local with --place)");
  q_iso->add_option("form", q_form)->required();
  q_iso->add_option("--place", q_place, "Decide over a single completion");
  q_iso->callback([&] {
    action = [&] {
      const DiagForm q = DiagForm::parse(q_form);
      if (!q_place.empty()) {
        const Place v = Place::parse(q_place);
        const bool ok = is_isotropic_local(q, v);
        emit_report(ok, ok ? std::vector<Place>{} : std::vector<Place>{v});
        return;
      }
      const IsotropyReport r = isotropy_report(q);
      emit_report(r.verdict, r.local_failures);
    };
  });
  auto* q_rep = qform_cmd->add_subcommand("represents", "Does the form take the value c over Q");
  q_rep->add_option("form", q_form)->required();
  q_rep->add_option("c", q_value)->required();
  q_rep->callback([&] {
    action = [&] {
      const IsotropyReport r = representation_report(DiagForm::parse(q_form), Rat::parse(q_value));
      emit_report(r.verdict, r.local_failures);
    };
  });
  auto* q_isom = qform_cmd->add_subcommand("isometric", "Isometry of two ternary forms");
  q_isom->add_option("form", q_form)->required();
  q_isom->add_option("form2", q_form2)->required();
  q_isom->callback([&] {
    action = [&] {
      const IsometryReport r = isometry_report(DiagForm::parse(q_form), DiagForm::parse(q_form2));
      emit_report(r.verdict, r.local_failures);
    };
  });

  // lie
  auto* lie_cmd = app.add_subcommand("lie", "Queries on L(alpha,beta)");
  lie_cmd->require_subcommand(1);
  std::string e_alpha, e_beta, e_alpha2, e_beta2, e_h;
  auto params = [&] { return LParams(Rat::parse(e_alpha), Rat::parse(e_beta)); };
  auto* lie_killing = lie_cmd->add_subcommand("killing", "Killing form Gram matrix");
  lie_killing->add_option("alpha", e_alpha)->required();
  lie_killing->add_option("beta", e_beta)->required();
  lie_killing->callback([&] {
    action = [&] {
      const Mat3 g = killing(from_params(params()));
      if (as_json) print_json({{"killing", gram_json(g)}, {"disc_class", disc_class(killing_form(params())).str()}});
      else {
        for (const auto& row : g) std::cout << to_string(row) << "\n";
        std::cout << "disc class: " << disc_class(killing_form(params())).str() << "\n";
      }
    };
  });
  auto* lie_split = lie_cmd->add_subcommand("split", "Splitness and ramification set");
  lie_split->add_option("alpha", e_alpha)->required();
  lie_split->add_option("beta", e_beta)->required();
  lie_split->callback([&] {
    action = [&] {
      const LParams p = params();
      const bool split = is_split(p);
      const auto ram = ramification(p);
      if (as_json) print_json({{"split", split}, {"ramification", places_json(ram)}});
      else std::cout << (split ? "SPLIT" : "NON-SPLIT") << "\nramification: {" << join_places(ram, ", ") << "}\n";
    };
  });
  auto* lie_iso = lie_cmd->add_subcommand("iso", "Is L(alpha,beta) isomorphic to L(alpha2,beta2)");
  lie_iso->add_option("alpha", e_alpha)->required();
  lie_iso->add_option("beta", e_beta)->required();
  lie_iso->add_option("alpha2", e_alpha2)->required();
  lie_iso->add_option("beta2", e_beta2)->required();
  lie_iso->callback([&] {
    action = [&] {
      const bool iso = is_isomorphic(params(), LParams(Rat::parse(e_alpha2), Rat::parse(e_beta2)));
      if (as_json) print_json({{"isomorphic", iso}});
      else std::cout << (iso ? "true" : "false") << "\n";
    };
  });
  auto* lie_charpoly = lie_cmd->add_subcommand("charpoly", "Characteristic polynomial of ad(h), h = x,y,z coordinates");
  lie_charpoly->add_option("alpha", e_alpha)->required();
  lie_charpoly->add_option("beta", e_beta)->required();
  lie_charpoly->add_option("element", e_h, "Coordinates x,y,z")->required();
  lie_charpoly->callback([&] {
    action = [&] {
      const Lie3 l = from_params(params());
      const LieVec h = parse_vec3(e_h);
      const CharPoly cp = ad_char_poly(l, h);
      const bool diag = ad_diagonalisable(l, h);
      if (as_json) {
        json coeffs = json::array();
        for (const Rat& c : cp.c) coeffs.push_back(c.str());
        print_json({{"coefficients", coeffs}, {"diagonalisable", diag}});
      } else {
        std::cout << cp.str() << "\n" << (diag ? "diagonalisable" : "not diagonalisable") << "\n";
      }
    };
  });

  // quat
  auto* quat_cmd = app.add_subcommand("quat", "Quaternion algebras (alpha,beta|Q)");
  quat_cmd->require_subcommand(1);
  std::string u_alpha, u_beta;
  auto* quat_table = quat_cmd->add_subcommand("table", "4x4 multiplication table on 1, i, j, ij");
  quat_table->add_option("alpha", u_alpha)->required();
  quat_table->add_option("beta", u_beta)->required();
  quat_table->callback([&] {
    action = [&] {
      const QuatAlg A(Rat::parse(u_alpha), Rat::parse(u_beta));
      const std::array<QuatElt, 4> e{QuatElt::one(), QuatElt::i(), QuatElt::j(), QuatElt::ij()};
      const std::array<const char*, 4> names{"1", "i", "j", "ij"};
      json rows = json::array();
      for (std::size_t r = 0; r < 4; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < 4; ++c) {
          const QuatElt x = mul(A, e[r], e[c]);
          json coords = json::array();
          for (const Rat& v : x.coords()) coords.push_back(v.str());
          row.push_back(coords);
          if (!as_json) std::cout << names[r] << "*" << names[c] << " = " << x.str() << (c == 3 ? "\n" : "   ");
        }
        rows.push_back(row);
      }
      if (as_json) print_json({{"table", rows}});
    };
  });
  auto* quat_ram = quat_cmd->add_subcommand("ram", "Ramification set as a JSON list");
  quat_ram->add_option("alpha", u_alpha)->required();
  quat_ram->add_option("beta", u_beta)->required();
  quat_ram->callback([&] {
    action = [&] { print_json(places_json(ramification_set(QuatAlg(Rat::parse(u_alpha), Rat::parse(u_beta))))); };
  });

  // brauer
  auto* brauer_cmd = app.add_subcommand("brauer", "Classes in Q*/Q*_{-1}");
  brauer_cmd->require_subcommand(1);
  std::string b_r, b_r2;
  auto emit_class = [&](const BrauerClass& c) {
    if (as_json) print_json({{"class", c.str()}});
    else std::cout << c.str() << "\n";
  };
  auto* brauer_class = brauer_cmd->add_subcommand("class", "Canonical representative of [r]");
  brauer_class->add_option("r", b_r)->required();
  brauer_class->callback([&] { action = [&] { emit_class(class_of(Rat::parse(b_r))); }; });
  auto* brauer_mul = brauer_cmd->add_subcommand("mul", "Canonical representative of [r][r2]");
  brauer_mul->add_option("r", b_r)->required();
  brauer_mul->add_option("r2", b_r2)->required();
  brauer_mul->callback([&] {
    action = [&] { emit_class(group_mul(class_of(Rat::parse(b_r)), class_of(Rat::parse(b_r2)))); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    set_factor_bound(max_bound);
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NotCartanType ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
