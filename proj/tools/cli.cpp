#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "jordan/checks.hpp"
#include "jordan/error.hpp"
#include "jordan/report_json.hpp"
#include "jordan/sampling.hpp"

namespace jordan::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Context {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read \"" + path + "\"");
  buf << f.rdbuf();
  return buf.str();
}

bool is_matrix(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::ostream& os, const std::string& pad);

void render_matrix(const Json& m, std::ostream& os, const std::string& pad) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : m["entries"]) {
    cells.emplace_back();
    for (const auto& e : row) {
      cells.back().push_back(e.get<std::string>());
      width = std::max(width, cells.back().back().size());
    }
  }
  if (cells.empty()) os << pad << "(empty)\n";
  for (const auto& row : cells) {
    os << pad << "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? " " : "") << std::string(width - row[c].size(), ' ') << row[c];
    }
    os << "]\n";
  }
}

void render_inline(const Json& a, std::ostream& os) {
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << scalar_text(a[i]);
  os << "]";
}

void render(const Json& j, std::ostream& os, const std::string& pad) {
  if (is_matrix(j)) {
    render_matrix(j, os, pad);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && is_flat(v)) {
        os << pad << k << ": ";
        render_inline(v, os);
        os << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, os, pad + "  ");
      }
    }
  } else if (j.is_array()) {
    if (is_flat(j)) {
      os << pad;
      render_inline(j, os);
      os << "\n";
      return;
    }
    for (const auto& e : j) {
      if (e.is_array() && is_flat(e)) {
        os << pad;
        render_inline(e, os);
        os << "\n";
      } else {
        os << pad << "-\n";
        render(e, os, pad + "  ");
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

void emit(const Context& ctx, const Json& j) {
  if (ctx.format == "json") {
    *ctx.out << j.dump(2) << "\n";
  } else {
    render(j, *ctx.out, "");
  }
}

Rep load_rep(const Context& ctx, const std::string& path) {
  return rep_from_json(parse_json(read_source(path, *ctx.in)));
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  for (const auto& t : texts) out.push_back(Rat::parse(t));
  return out;
}

Json check_report(const Context& ctx, const std::vector<std::string>& names, const CheckOptions& options,
                  std::size_t jobs, bool timing, bool& all_passed) {
  std::vector<CheckResult> results(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) results[i] = run_check(names[i], options);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(jobs, names.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });

  all_passed = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    Json j = check_result_to_json(r);
    if (timing) j["seconds"] = r.seconds;
    list.push_back(std::move(j));
  }
  if (ctx.format == "text") {
    for (const auto& r : results) {
      *ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
      if (timing) *ctx.out << " (" << r.seconds << "s)";
      *ctx.out << "\n";
    }
    *ctx.out << "seed " << options.seed << "\n";
  }
  return Json{{"seed", options.seed}, {"max_n", options.max_n}, {"passed", all_passed}, {"results", std::move(list)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.in = &in;
  ctx.out = &out;

  CLI::App app{"Exact computations in the Jordanian algebra k<x,y>/(xy - yx - y^2)", "jordan"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for every randomized step")->capture_default_str();

  std::function<int()> action;
  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string poly;
  CLI::App* nf = command("nf", "Normal form y^k x^l of a polynomial such as \"x^2*y - 1/2*y\"");
  nf->add_option("poly", poly, "Polynomial text, or - for stdin")->required();
  nf->callback([&] {
    action = [&] {
      const std::string text = poly == "-" ? read_source("-", in) : poly;
      const NormalPoly p = normal_form(parse_ncpoly(text));
      if (ctx.format == "json") {
        out << normal_poly_to_json(p).dump() << "\n";
      } else {
        out << p.str() << "\n";
      }
      return Ok;
    };
  });

  std::vector<std::size_t> parts;
  std::vector<std::string> lambdas;
  std::string params_path;
  CLI::App* build = command("build", "Build the representation of a partition from its parameters");
  build->add_option("--partition", parts, "Jordan type of Y, e.g. 3,2")->delimiter(',')->required();
  build->add_option("--lambda", lambdas, "Eigenvalue per part, or one value for all")->delimiter(',');
  build->add_option("--params", params_path, "Params JSON file, or - for stdin");
  build->callback([&] {
    action = [&] {
      const Partition p(parts);
      PartitionParams pp = params_path.empty() ? PartitionParams::zero(p)
                                               : params_from_json(parse_json(read_source(params_path, in)), p);
      if (!lambdas.empty()) {
        std::vector<Rat> l = parse_rats(lambdas);
        if (l.size() == 1) l.assign(p.size(), l[0]);
        if (l.size() != p.size()) {
          throw Error(ErrorCode::ParamCountMismatch, "--lambda needs 1 or " + std::to_string(p.size()) + " values");
        }
        pp.lambda = std::move(l);
      }
      emit(ctx, rep_to_json(build_from_partition(p, pp)));
      return Ok;
    };
  });

  std::string rep_path;
  CLI::App* validate = command("validate", "Check that X and Y satisfy XY - YX = Y^2");
  validate->add_option("rep", rep_path, "Rep JSON file, or - for stdin")->required();
  validate->callback([&] {
    action = [&] {
      const Rep r = load_rep(ctx, rep_path);
      emit(ctx, Json{{"valid", true}, {"n", r.n()}, {"partition", partition_to_json(r.partition())}});
      return Ok;
    };
  });

  auto rep_option = [&](CLI::App* sub) { sub->add_option("--rep", rep_path, "Rep JSON file, or - for stdin")->required(); };

  CLI::App* eval = command("eval", "Evaluate a polynomial on a representation");
  eval->add_option("--poly", poly, "Polynomial text")->required();
  rep_option(eval);
  eval->callback([&] {
    action = [&] {
      emit(ctx, qmat_to_json(evaluate_free(parse_ncpoly(poly), load_rep(ctx, rep_path))));
      return Ok;
    };
  });

  CLI::App* image = command("image", "Dimension, radical filtration and quiver of the image algebra");
  rep_option(image);
  image->callback([&] {
    action = [&] {
      emit(ctx, algebra_desc_to_json(describe_image(load_rep(ctx, rep_path))));
      return Ok;
    };
  });

  CLI::App* quiv = command("quiver", "Quiver of the image algebra");
  rep_option(quiv);
  quiv->callback([&] {
    action = [&] {
      emit(ctx, quiver_to_json(quiver(load_rep(ctx, rep_path))));
      return Ok;
    };
  });

  CLI::App* dec = command("decompose", "Split into generalized eigenspaces of X");
  rep_option(dec);
  dec->callback([&] {
    action = [&] {
      emit(ctx, decomposition_to_json(decompose(load_rep(ctx, rep_path))));
      return Ok;
    };
  });

  CLI::App* canon = command("canon", "Canonical pair (lambda, mu) of a rep with rank Y = n - 1");
  rep_option(canon);
  canon->callback([&] {
    action = [&] {
      emit(ctx, canonical_pair_to_json(canonical_full_block(load_rep(ctx, rep_path))));
      return Ok;
    };
  });

  std::string other_path;
  std::size_t trials = 200;
  CLI::App* iso = command("iso", "Decide whether two representations are isomorphic");
  rep_option(iso);
  iso->add_option("--other", other_path, "Second Rep JSON file")->required();
  iso->add_option("--trials", trials, "Random intertwiner attempts")->capture_default_str();
  iso->callback([&] {
    action = [&] {
      const Rep a = load_rep(ctx, rep_path);
      const Rep b = load_rep(ctx, other_path);
      Json j = iso_result_to_json(are_isomorphic(a, b, ctx.seed, trials));
      j["seed"] = ctx.seed;
      emit(ctx, j);
      return Ok;
    };
  });

  std::size_t jac_n = 0;
  CLI::App* jac = command("jacobian", "Rank of the orbit map differential on the full-block stratum");
  jac->add_option("--n", jac_n, "Dimension")->required()->check(CLI::PositiveNumber);
  jac->add_option("--params", params_path, "Params JSON for partition (n); random from the seed when absent");
  jac->callback([&] {
    action = [&] {
      Rng rng(ctx.seed);
      FullBlockParams fb;
      if (params_path.empty()) {
        fb = random_full_block_params(rng, jac_n);
      } else {
        const PartitionParams pp = params_from_json(parse_json(read_source(params_path, in)), Partition{jac_n});
        fb.lambda = pp.lambda[0];
        fb.c = pp.diag[0];
      }
      const std::size_t rank = jacobian_rank(jac_n, fb, rng());
      emit(ctx, Json{{"n", jac_n}, {"seed", ctx.seed}, {"rank", rank}});
      return Ok;
    };
  });

  std::string suite;
  CheckOptions check_options;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;
  CLI::App* check = command("check", "Run an acceptance suite, or all of them");
  check->add_option("suite", suite, "Suite name or all")->required()->check([](const std::string& s) {
    return s == "all" || is_check_name(s) ? std::string() : "unknown suite " + s;
  });
  check->add_option("--max-n", check_options.max_n, "Upper dimension; 0 keeps each suite's default");
  check->add_option("--jobs", jobs, "Suites run in parallel")->check(CLI::PositiveNumber);
  check->add_flag("--timing", timing, "Report seconds per suite");
  check->callback([&] {
    action = [&] {
      check_options.seed = ctx.seed;
      const std::vector<std::string> names = suite == "all" ? check_names() : std::vector<std::string>{suite};
      bool passed = false;
      const Json report = check_report(ctx, names, check_options, jobs, timing, passed);
      if (ctx.format == "json") out << report.dump(2) << "\n";
      return passed ? Ok : PropertyFailure;
    };
  });

  std::vector<std::string> argv_store{"jordan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? Ok : Usage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? Usage : Domain;
  }
}

}  // namespace jordan::cli
