// eqknot: decide and witness the algebraic slice/ribbon conditions, realize
// witnesses as box diagrams, and compute torsion of based chain complexes.
//
// Exit codes: 0 = YES/valid, 1 = NO/invalid (including violated semantic
// preconditions), 2 = usage, syntax, or file-format error.
#include <eqknot/conditions.hpp>
#include <eqknot/construct.hpp>
#include <eqknot/json_io.hpp>
#include <eqknot/parse.hpp>
#include <eqknot/report.hpp>
#include <eqknot/torsion.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_pair_verdict(const char* label, const eqknot::Verdict<eqknot::FoxPair>& v) {
  std::cout << label << (v.yes ? "YES" : "NO") << "\n";
  if (v.yes) {
    std::cout << "witness p = " << eqknot::format_poly(v.witness->p) << "\n";
    std::cout << "witness q = " << eqknot::format_poly(v.witness->q) << "\n";
  } else {
    std::cout << "certificate: " << v.certificate << "\n";
  }
  std::cout << "candidates = " << v.candidates << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eqknot;

  CLI::App app{"equivariant slice/ribbon condition calculator"};
  app.require_subcommand(1);
  int rc = 0;

  // check
  CLI::App* check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);

  auto* alex = check->add_subcommand("alexander", "abstract Alexander polynomial test");
  {
    auto s = std::make_shared<std::string>();
    alex->add_option("poly", *s, "Laurent polynomial in t")->required();
    alex->callback([&rc, s]() {
      ZPoly p = parse_poly(*s);
      bool ok = is_abstract_alexander(p);
      std::cout << "abstract Alexander: " << yesno(ok) << "\n";
      rc = ok ? 0 : 1;
    });
  }

  auto* slice = check->add_subcommand("slice", "Fox factorization test");
  {
    auto s = std::make_shared<std::string>();
    slice->add_option("poly", *s, "Laurent polynomial in t")->required();
    slice->callback([&rc, s]() {
      Verdict<SliceWitness> v = check_fox_slice(parse_poly(*s));
      std::cout << "slice condition (Fox factorization): " << (v.yes ? "YES" : "NO") << "\n";
      if (v.yes)
        std::cout << "witness p = " << format_poly(v.witness->p) << "\n";
      else
        std::cout << "certificate: " << v.certificate << "\n";
      std::cout << "candidates = " << v.candidates << "\n";
      rc = v.yes ? 0 : 1;
    });
  }

  auto* mur = check->add_subcommand("murasugi", "Murasugi condition checklist");
  {
    auto s = std::make_shared<std::string>();
    auto q = std::make_shared<long>(2);
    auto maxq = std::make_shared<long>(kDefaultMaxQ);
    mur->add_option("--q", *q, "group order")->required()->check(CLI::PositiveNumber);
    mur->add_option("--max-q", *maxq, "norm cap")->check(CLI::PositiveNumber);
    mur->add_option("poly", *s, "polynomial in g and t")->required();
    mur->callback([&rc, s, q, maxq]() {
      MurasugiRecord r = check_murasugi(parse_poly2(*s, *q), *maxq);
      std::cout << "symmetric: " << yesno(r.symmetric) << "\n";
      std::cout << "augmentation unit: " << yesno(r.augments) << "\n";
      std::cout << "knot polynomial = " << format_poly(r.knotPoly) << "\n";
      std::cout << "quotient polynomial = " << format_poly(r.quotientPoly) << "\n";
      std::cout << "quotient divides: " << yesno(r.quotientDivides) << "\n";
      bool ok = r.symmetric && r.augments && r.quotientDivides;
      std::cout << "murasugi conditions: " << (ok ? "YES" : "NO") << "\n";
      rc = ok ? 0 : 1;
    });
  }

  auto* eqs = check->add_subcommand("eqslice2", "2-equivariant slice conditions");
  {
    auto d = std::make_shared<std::string>();
    auto dq = std::make_shared<std::string>();
    eqs->add_option("delta", *d, "knot polynomial")->required();
    eqs->add_option("deltaQuot", *dq, "quotient polynomial")->required();
    eqs->callback([&rc, d, dq]() {
      Verdict<FoxPair> v = check_2eq_slice(parse_poly(*d), parse_poly(*dq));
      print_pair_verdict("2-equivariant slice: ", v);
      rc = v.yes ? 0 : 1;
    });
  }

  auto* eqr = check->add_subcommand("eqribbon2", "2-equivariant ribbon conditions");
  {
    auto d = std::make_shared<std::string>();
    auto dq = std::make_shared<std::string>();
    eqr->add_option("delta", *d, "knot polynomial")->required();
    eqr->add_option("deltaQuot", *dq, "quotient polynomial")->required();
    eqr->callback([&rc, d, dq]() {
      Verdict<FoxPair> v = check_2eq_ribbon(parse_poly(*d), parse_poly(*dq));
      print_pair_verdict("2-equivariant ribbon: ", v);
      rc = v.yes ? 0 : 1;
    });
  }

  // witness
  CLI::App* witness = app.add_subcommand("witness", "witness constructions");
  witness->require_subcommand(1);

  auto* wmodq = witness->add_subcommand("modq", "mod-q ribbon witness");
  {
    auto s = std::make_shared<std::string>();
    auto q = std::make_shared<long>(2);
    auto maxq = std::make_shared<long>(kDefaultMaxQ);
    wmodq->add_option("--q", *q, "group order")->required()->check(CLI::PositiveNumber);
    wmodq->add_option("--max-q", *maxq, "norm cap")->check(CLI::PositiveNumber);
    wmodq->add_option("p", *s, "polynomial congruent to 1 mod q")->required();
    wmodq->callback([&rc, s, q, maxq]() {
      EqRibbonWitness w = modq_witness(parse_poly(*s), *q, *maxq);
      std::cout << "a = " << format_poly2(w.a) << "\n";
      rc = 0;
    });
  }

  auto* wslice2 = witness->add_subcommand("slice2", "2-equivariant slice witness");
  {
    auto ps = std::make_shared<std::string>();
    auto qs = std::make_shared<std::string>();
    wslice2->add_option("p", *ps, "Fox witness of the knot polynomial")->required();
    wslice2->add_option("q", *qs, "Fox witness of the quotient polynomial")->required();
    wslice2->callback([&rc, ps, qs]() {
      EqSliceWitness w = build_2eq_slice_witness(parse_poly(*ps), parse_poly(*qs));
      std::cout << "deltaZ2 = " << format_poly2(w.deltaZq) << "\n";
      std::cout << "a = " << format_poly2(w.a) << "\n";
      std::cout << "b = " << format_poly2(w.b) << "\n";
      rc = 0;
    });
  }

  // realize
  auto* real = app.add_subcommand("realize", "box-diagram realization of a witness");
  {
    auto s = std::make_shared<std::string>();
    auto q = std::make_shared<long>(2);
    auto maxq = std::make_shared<long>(kDefaultMaxQ);
    real->add_option("--q", *q, "group order")->required()->check(CLI::PositiveNumber);
    real->add_option("--max-q", *maxq, "norm cap")->check(CLI::PositiveNumber);
    real->add_option("a", *s, "witness polynomial in g and t")->required();
    real->callback([&rc, s, q, maxq]() {
      Realization r = realize(parse_poly2(*s, *q), *maxq);
      std::cout << realization_to_json(r).dump(2) << "\n";
      rc = 0;
    });
  }

  // linking
  auto* link = app.add_subcommand("linking", "equivariant linking of a crossing list");
  {
    auto path = std::make_shared<std::string>();
    auto q = std::make_shared<long>(2);
    link->add_option("--q", *q, "group order")->required()->check(CLI::PositiveNumber);
    link->add_option("crossings", *path, "JSON file: array of {sign, g, t}")->required();
    link->callback([&rc, path, q]() {
      CrossingList c = crossings_from_json(load_json_file(*path), *q);
      std::cout << format_poly2(equivariant_linking(c)) << "\n";
      rc = 0;
    });
  }

  // torsion
  auto* tors = app.add_subcommand("torsion", "Reidemeister torsion of a based complex");
  {
    auto path = std::make_shared<std::string>();
    tors->add_option("complex", *path, "JSON file: {ranks, matrices}")->required();
    tors->callback([&rc, path]() {
      BasedChainComplex c = complex_from_json(load_json_file(*path));
      std::cout << format_ratfun(torsion(c)) << "\n";
      rc = 0;
    });
  }

  // db
  CLI::App* db = app.add_subcommand("db", "knot-table operations");
  db->require_subcommand(1);
  auto* dbrun = db->add_subcommand("run", "verdict report over a knot table");
  {
    auto path = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto maxq = std::make_shared<long>(kDefaultMaxQ);
    auto timings = std::make_shared<bool>(false);
    dbrun->add_option("table", *path, "TSV: name, polynomial, period, notes")->required();
    dbrun->add_option("--out", *out, "write the report here instead of stdout");
    dbrun->add_option("--max-q", *maxq, "norm cap")->check(CLI::PositiveNumber);
    dbrun->add_flag("--timings", *timings, "include per-knot timings");
    dbrun->callback([&rc, path, out, maxq, timings]() {
      std::ifstream in(*path);
      if (!in) throw io_error("cannot open " + *path);
      ReportResult r = run_report(load_knot_table(in), *maxq, *timings);
      std::string text = r.json.dump(2);
      if (out->empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream o(*out);
        if (!o) throw io_error("cannot open " + *out);
        o << text << "\n";
      }
      rc = r.allValid ? 0 : 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
