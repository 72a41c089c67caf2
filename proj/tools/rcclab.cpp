#include <iostream>

#include <CLI11.hpp>

#include "rcclab/acceptance.hpp"
#include "rcclab/json_io.hpp"

namespace io = rcclab::io;
using io::json;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::uint64_t> parse_csv_uints(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split_csv(s)) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 12)
      throw rcclab::InvalidInput(std::string(what) + " must be a comma-separated list of positive integers");
    out.push_back(std::stoull(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rcclab: regular cycle condition toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  std::uint64_t seed = rcclab::AcceptanceOptions{}.seed;
  app.add_flag("--pretty", pretty, "indented output");
  app.add_option("--seed", seed, "seed for randomized checks");

  std::string input, aut_path;
  bool no_records = false, all_certs = false;

  auto* analyze = app.add_subcommand("analyze", "enumerate Aut(G) and report the RCC for each automorphism");
  analyze->add_option("input", input, "group or construct JSON ('-' for stdin)")->required();
  analyze->add_flag("--no-records", no_records, "omit per-automorphism records");
  analyze->add_flag("--all-certificates", all_certs, "list every applicable certificate");

  auto* check = app.add_subcommand("check-rcc", "RCC verdict for one automorphism");
  check->add_option("group", input, "group JSON ('-' for stdin)")->required();
  check->add_option("--aut", aut_path, "automorphism JSON")->required();
  check->add_flag("--all-certificates", all_certs, "list every applicable certificate");

  auto* construct = app.add_subcommand("construct", "build a group with a packaged automorphism");
  construct->require_subcommand(1);
  std::string primes = "3,5,7", exps = "1,1,1", catalog_name;
  std::uint64_t order = 0;
  auto* go = construct->add_subcommand("g-o", "B x| V4 family");
  go->add_option("--primes", primes, "three increasing primes");
  go->add_option("--exps", exps, "three positive exponents");
  auto* many = construct->add_subcommand("many-prime", "G_o times cyclic factors");
  many->add_option("--order", order, "automorphism order")->required();
  auto* sg = construct->add_subcommand("sg120-8", "SmallGroup(120,8) with its non-RCC automorphism");
  auto* cat = construct->add_subcommand("catalog", "a catalog group");
  cat->add_option("name", catalog_name, "e.g. cyclic(6), abelian([2,2],[3]), symmetric(4)")->required();

  auto* frob = app.add_subcommand("frobenius", "invariant-factor form of a matrix over GF(p)");
  frob->add_option("matrix", input, "matrix JSON")->required();
  auto* porder = app.add_subcommand("poly-order", "order of a polynomial over GF(p)");
  porder->add_option("poly", input, "polynomial JSON")->required();
  auto* rbasis = app.add_subcommand("regular-basis", "basis of regular vectors for v -> Av");
  rbasis->add_option("matrix", input, "matrix JSON")->required();

  auto* accept = app.add_subcommand("acceptance", "run the acceptance suite");
  bool extended = false;
  std::vector<int> only;
  accept->add_flag("--extended", extended, "also enumerate Aut(S6)");
  accept->add_option("--only", only, "run only these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; };

  try {
    if (*accept) {
      rcclab::AcceptanceOptions opts;
      opts.seed = seed;
      opts.extended = extended;
      opts.only.insert(only.begin(), only.end());
      bool all = true;
      for (const auto& r : rcclab::run_acceptance(opts)) {
        std::cout << rcclab::format_result(r) << "\n" << std::flush;
        all &= r.pass;
      }
      return all ? 0 : 1;
    }
    if (*analyze) {
      io::AnalyzeOptions opts;
      opts.records = !no_records;
      opts.all_certificates = all_certs;
      emit(io::analyze(io::read_json(input), opts));
    } else if (*check) {
      auto g = io::group_from_json(io::read_json(input));
      auto a = io::automorphism_from_json(g, io::read_json(aut_path));
      emit(io::verdict_record(a, all_certs));
    } else if (*construct) {
      if (*go) {
        auto ps = parse_csv_uints(primes, "--primes");
        auto es = parse_csv_uints(exps, "--exps");
        std::vector<unsigned> e32(es.begin(), es.end());
        emit(io::to_json(rcclab::construct_Go(ps, e32)));
      } else if (*many) {
        emit(io::to_json(rcclab::construct_many_prime(order)));
      } else if (*sg) {
        emit(io::to_json(rcclab::construct_sg120_8()));
      } else if (*cat) {
        emit(io::to_json(rcclab::catalog(catalog_name)));
      }
    } else if (*frob) {
      emit(io::frobenius_report(io::matrix_from_json(io::read_json(input))));
    } else if (*porder) {
      emit(io::poly_order_report(io::poly_from_json(io::read_json(input))));
    } else if (*rbasis) {
      emit(io::regular_basis_report(io::matrix_from_json(io::read_json(input))));
    }
  } catch (const rcclab::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rcclab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
