/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "flipcheck/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include "flipcheck/designs.hpp"
#include "flipcheck/field.hpp"
#include "flipcheck/obstruction.hpp"
#include "flipcheck/oracles.hpp"
#include "flipcheck/pit.hpp"
#include "flipcheck/queries.hpp"

namespace flipcheck {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << data;
}

std::vector<BigInt> parse_bigints(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty entry in '" + text + "'");
    out.push_back(parse_bigint(item.substr(b, e - b + 1)));
  }
  return out;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s;
}

std::string format_point(const MatrixAssignment& x) {
  std::string s = "[";
  for (std::size_t r = 0; r < x.shape.rows(); ++r) {
    if (r) s += ";";
    for (std::size_t c = 0; c < x.shape.cols(); ++c) s += (c ? "," : "") + x.at(r, c).get_str();
  }
  return s + "]";
}

// Lines of a --config file become --key=value arguments placed before the
// command line, so explicit flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest, injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
      continue;
    }
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
      if (line.find('=') == std::string::npos) throw ConfigError("config line without '=': " + line);
      injected.push_back("--" + line);
    }
  }
  if (rest.empty()) return injected;
  // The subcommand name stays first.
  std::vector<std::string> out{rest.front()};
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

struct RingFlags {
  std::string ring = "modular";
  std::size_t prime_bits = 61;
  std::size_t primes = 3;

  void add(CLI::App* app) {
    app->add_option("--ring", ring, "modular or integer")->check(CLI::IsMember({"modular", "integer"}));
    app->add_option("--prime-bits", prime_bits, "bit length of the random primes")->check(CLI::Range(16, 62));
    app->add_option("--primes", primes, "primes per query")->check(CLI::Range(1, 16));
  }
  RingConfig config() const {
    RingConfig r;
    r.kind = ring == "integer" ? RingConfig::Kind::Integer : RingConfig::Kind::Modular;
    r.prime_bits = prime_bits;
    r.primes = primes;
    return r;
  }
};

struct QueryFlags {
  std::size_t queries = 20;
  std::size_t nonzero = 3;
  std::size_t sample_bits = 62;
  bool no_normalize = false;
  std::string det_mode = "det-corrected";

  void add(CLI::App* app, bool efun) {
    app->add_option("--queries", queries, "queries per run");
    app->add_option("--nonzero", nonzero, "nonzero tests among them");
    app->add_option("--sample-bits", sample_bits, "random entries lie in [1, 2^bits]")->check(CLI::Range(1, 62));
    app->add_flag("--no-normalize", no_normalize, "drop the C(I) = 1 query");
    if (efun) app->add_option("--det-mode", det_mode, "literal or det-corrected");
  }
  QueryConfig config() const {
    QueryConfig q;
    q.count = queries;
    q.nonzero_count = nonzero;
    q.sample_bits = sample_bits;
    q.normalize = !no_normalize;
    q.det_mode = parse_det_mode(det_mode);
    return q;
  }
};

struct DesignFlags {
  std::size_t l = 0, r = 0, kcap = 0, rows = 0;
  std::string log_scale;

  void add(CLI::App* app) {
    app->add_option("--l", l, "universe size");
    app->add_option("--r", r, "set size");
    app->add_option("--kcap", kcap, "intersection cap");
    app->add_option("--rows", rows, "number of sets");
    app->add_option("--log-scale", log_scale, "m,c,a,b: m^c sets, r = a log m, l = b log m");
  }
  DesignParams params() const {
    if (!log_scale.empty()) {
      const auto v = parse_bigints(log_scale);
      if (v.size() != 4) throw ConfigError("--log-scale expects m,c,a,b");
      for (const auto& x : v)
        if (x < 0 || !x.fits_ulong_p()) throw ConfigError("--log-scale values must be non-negative");
      return DesignParams::from_log_scale({v[0].get_ui(), v[1].get_ui(), v[2].get_ui(), v[3].get_ui()});
    }
    if (l == 0 && rows == 0) return default_design_params();
    DesignParams p;
    p.l = l;
    p.r = r;
    p.k_cap = kcap;
    p.m_prime = rows;
    return p;
  }
};

Design read_design(const std::string& path) {
  const auto data = read_file(path);
  return decode_design(std::vector<std::uint8_t>(data.begin(), data.end()));
}

void write_design(const std::string& path, const Design& d) {
  const auto bytes = encode_design(d);
  write_file(path, std::string(bytes.begin(), bytes.end()));
}

void print_verdict_witness(std::ostream& out, const VerifyReport& rep) {
  for (const auto& v : rep.run.verdicts) {
    if (v.pass) continue;
    out << "witness " << query_kind_name(v.kind) << " query=" << v.index << (v.detail.empty() ? "" : " ")
        << v.detail << "\n";
    for (const auto& p : v.witness) out << "  point " << format_point(p) << "\n";
    break;
  }
}

// Flags k below 3, outside the range where deciding E(X) = 0 is NP-complete.
void print_sub_threshold(std::ostream& out, std::size_t k) {
  if (k < 3) out << "sub-threshold k=" << k << " (hardness needs k >= 3)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flipcheck: symmetry-based verification, identity testing and obstruction certificates"};
  app.name("flipcheck");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::map<CLI::App*, std::function<int()>> actions;
  auto command = [&](const std::string& name, const std::string& about, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--config", "key=value file; each line acts as --key=value");
    actions[sub] = std::move(fn);
    return sub;
  };

  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string circuit_path, out_path, in_path;

  // eval
  std::string point_text;
  std::size_t eval_prime_bits = 0;
  auto* eval = command("eval", "evaluate a circuit at a point", [&] {
    const auto c = Circuit::load(circuit_path);
    const auto point = parse_bigints(point_text);
    if (eval_prime_bits == 0) {
      const auto value = evaluate(c, std::span<const BigInt>(point));
      out << "value " << value.get_str() << "\n";
    } else {
      const auto r = evaluate_mod_random_prime(c, point, eval_prime_bits, seed);
      out << "residue " << r.residue << " prime " << r.prime << "\n";
    }
    return kExitOk;
  });
  eval->add_option("--circuit", circuit_path, "circuit file")->required();
  eval->add_option("--point", point_text, "comma-separated inputs")->required();
  eval->add_option("--prime-bits", eval_prime_bits, "evaluate modulo a random prime of this size (0: exact)");
  eval->add_option("--seed", seed, "seed for the prime");

  // pit
  std::size_t trials = 20, pit_prime_bits = 0;
  std::string box_text = "1024";
  auto* pit = command("pit", "randomized identity test", [&] {
    const auto c = Circuit::load(circuit_path);
    const auto r = pit_random(c, trials, seed, parse_bigint(box_text), pit_prime_bits);
    if (r.nonzero) {
      out << "nonzero witness=" << join(r.witness) << " value=" << r.value << " trials=" << r.trials_run << "\n";
    } else {
      out << "zero trials=" << r.trials_run << " error_bound=" << r.error_bound << "\n";
    }
    return kExitOk;
  });
  pit->add_option("--circuit", circuit_path, "circuit file")->required();
  pit->add_option("--trials", trials, "number of random points");
  pit->add_option("--box", box_text, "points are drawn from [1, box]^n");
  pit->add_option("--prime-bits", pit_prime_bits, "evaluate modulo random primes (0: exact)");
  pit->add_option("--seed", seed, "rng seed");

  // verify-perm / verify-efun
  std::size_t n = 2, m = 1, k = 2;
  RingFlags ring_flags;
  QueryFlags query_flags;
  std::string route = "symmetry";
  bool exhaustive = false;
  auto verify_config = [&] {
    VerifyConfig cfg;
    cfg.queries = query_flags.config();
    cfg.ring = ring_flags.config();
    cfg.threads = threads;
    cfg.route = route == "selfreduce" ? VerifyConfig::Route::SelfReduce
                : route == "both"     ? VerifyConfig::Route::Both
                                      : VerifyConfig::Route::Symmetry;
    return cfg;
  };
  auto* vperm = command("verify-perm", "check a circuit against the permanent's symmetry identities", [&] {
    const auto c = Circuit::load(circuit_path);
    if (exhaustive) {
      const auto v = verify_claims_perm_exhaustive(c, n, !query_flags.no_normalize);
      out << (v.accept ? "ACCEPT" : "REJECT " + v.failed) << "\n";
      return v.accept ? kExitOk : kExitReject;
    }
    const auto rep = verify_claims_perm(c, n, verify_config(), seed);
    out << rep.transcript << "error_bound " << rep.error_bound << "\n";
    if (!rep.accept) print_verdict_witness(out, rep);
    return rep.accept ? kExitOk : kExitReject;
  });
  vperm->add_option("--n", n, "matrix size")->required();
  vperm->add_option("--circuit", circuit_path, "circuit file")->required();
  vperm->add_option("--seed", seed, "rng seed");
  vperm->add_option("--route", route, "symmetry, selfreduce or both")
      ->check(CLI::IsMember({"symmetry", "selfreduce", "both"}));
  vperm->add_flag("--exhaustive", exhaustive, "decide every identity on a degree grid instead of sampling");
  vperm->add_option("--threads", threads, "worker threads");
  ring_flags.add(vperm);
  query_flags.add(vperm, false);

  auto* vefun = command("verify-efun", "check a circuit against the identities of E(X)", [&] {
    const auto c = Circuit::load(circuit_path);
    const auto rep = verify_claims_efun(c, m, k, verify_config(), seed);
    out << rep.transcript << "error_bound " << rep.error_bound << "\n";
    print_sub_threshold(out, k);
    if (!rep.accept) print_verdict_witness(out, rep);
    return rep.accept ? kExitOk : kExitReject;
  });
  vefun->add_option("--m", m, "rows")->required();
  vefun->add_option("--k", k, "column blocks")->required();
  vefun->add_option("--circuit", circuit_path, "circuit file")->required();
  vefun->add_option("--seed", seed, "rng seed");
  vefun->add_option("--threads", threads, "worker threads");
  ring_flags.add(vefun);
  query_flags.add(vefun, true);

  // efun-oracle
  std::string entries_text;
  auto* eoracle = command("efun-oracle", "evaluate E(X), report its degree, optionally emit its circuit", [&] {
    out << "degree " << efun_degree(m, k) << "\n";
    print_sub_threshold(out, k);
    out << "sigma_count " << sigma_count(m, k) << "\n";
    if (!entries_text.empty()) {
      const MatrixAssignment x(Shape::block(m, k), parse_bigints(entries_text));
      out << "value " << efun(x).get_str() << "\n";
    }
    if (!out_path.empty()) {
      write_file(out_path, "# flipcheck efun-oracle m=" + std::to_string(m) + " k=" + std::to_string(k) + "\n" +
                               efun_circuit(m, k).serialize());
    }
    return kExitOk;
  });
  eoracle->add_option("--m", m, "rows")->required();
  eoracle->add_option("--k", k, "column blocks")->required();
  eoracle->add_option("--entries", entries_text, "m x km matrix, row-major, comma-separated");
  eoracle->add_option("--out", out_path, "write the E(X) circuit here");

  // designs
  DesignFlags design_flags;
  std::string hex_text;
  auto* gdesign = command("gen-design", "construct a (k, r)-design", [&] {
    const auto d = build_design_greedy(design_flags.params(), seed);
    out << "design l=" << d.params.l << " r=" << d.params.r << " kcap=" << d.params.k_cap
        << " rows=" << d.params.m_prime << "\n"
        << d.to_string() << "hex " << to_hex(encode_design(d)) << "\n";
    if (!out_path.empty()) write_design(out_path, d);
    return kExitOk;
  });
  design_flags.add(gdesign);
  gdesign->add_option("--seed", seed, "rng seed");
  gdesign->add_option("--out", out_path, "write the binary encoding here");

  auto* vdesign = command("verify-design", "check a design file or hex string", [&] {
    if (in_path.empty() == hex_text.empty()) throw ConfigError("give exactly one of --in and --hex");
    const auto d = in_path.empty() ? decode_design(from_hex(hex_text)) : read_design(in_path);
    const auto v = verify_design(d);
    out << (v.valid() ? "valid" : "invalid " + v.describe()) << "\n";
    return v.valid() ? kExitOk : kExitReject;
  });
  vdesign->add_option("--in", in_path, "binary design file");
  vdesign->add_option("--hex", hex_text, "hex encoding");

  std::uint64_t count_budget = 50'000'000;
  auto* cdesign = command("count-designs", "count designs by exhaustive search", [&] {
    out << "count " << count_designs_exhaustive(design_flags.params(), count_budget).get_str() << "\n";
    return kExitOk;
  });
  design_flags.add(cdesign);
  cdesign->add_option("--budget", count_budget, "largest search space C(l,r)^rows allowed");

  // hitting sets
  std::string class_text;
  PoolOptions pool;
  std::string pool_box = "1024";
  std::size_t family = 0;
  auto* bhs = command("build-hitting-set", "greedy hitting set for a circuit class", [&] {
    pool.box = parse_bigint(pool_box);
    pool.seed = seed;
    const auto h = build_hitting_set_greedy(ClassParams::parse(class_text), pool, family);
    out << "hitting-set points=" << h.points.size() << " bits=" << h.total_bits() << "\n";
    for (const auto& p : h.points) out << "  " << join(p) << "\n";
    if (!out_path.empty()) {
      write_file(out_path, "# flipcheck build-hitting-set seed=" + std::to_string(seed) + " pool_size=" +
                               std::to_string(pool.pool_size) + " box=" + pool.box.get_str() + " family=" +
                               std::to_string(family) + "\n" + h.serialize());
    }
    return kExitOk;
  });
  bhs->add_option("--class", class_text, "e.g. \"n=1 m=4 alphabet=-1,0,1 regime=size\"")->required();
  bhs->add_option("--pool-size", pool.pool_size, "candidates per family");
  bhs->add_option("--box", pool_box, "candidate coordinates lie in [1, box]");
  bhs->add_option("--family", family, "candidate pool slice");
  bhs->add_option("--seed", seed, "pool relabeling seed");
  bhs->add_option("--out", out_path, "write the hitting set here");

  auto* vhs = command("verify-hitting-set", "check a hitting set against its whole class", [&] {
    const auto h = HittingSet::parse(read_file(in_path));
    const auto v = verify_hitting_set(h);
    if (v.valid) {
      out << "valid points=" << h.points.size() << "\n";
      return kExitOk;
    }
    out << "invalid missed circuit:\n" << v.violator->serialize();
    return kExitReject;
  });
  vhs->add_option("--in", in_path, "hitting set file")->required();

  // certificates
  ObstructionConfig ocfg;
  std::string target_text = "perm(2)", design_path;
  std::optional<std::size_t> seed_bits;
  std::uint64_t design_seed = 1;
  auto add_obstruction_flags = [&](CLI::App* sub) {
    sub->add_option("--target", target_text, "perm(n) or efun(m,k)");
    sub->add_option("--class", class_text, "circuit class the certificate must obstruct")->required();
    sub->add_option("--seed-bits", seed_bits, "log2 of the number of generator seeds");
    sub->add_option("--queries-per-tape", ocfg.queries_per_tape, "queries generated per tape");
    sub->add_option("--generator-seed", ocfg.generator_seed, "seed of the committed truth table");
    sub->add_option("--sample-bits", ocfg.sample_bits, "random entries lie in [1, 2^bits]");
    sub->add_option("--design", design_path, "label design file (default: built from --design-seed)");
    sub->add_option("--design-seed", design_seed, "seed for building the label");
    sub->add_option("--threads", threads, "worker threads");
    design_flags.add(sub);
  };
  auto obstruction_inputs = [&] {
    ocfg.target = Target::parse(target_text);
    ocfg.cls = ClassParams::parse(class_text);
    ocfg.seed_bits = seed_bits;
    if (ocfg.cls.n != ocfg.target.arity()) throw ConfigError("class inputs do not match the target");
    ocfg.effective_seed_bits();
    const Design label = design_path.empty() ? build_design_greedy(design_flags.params(), design_seed)
                                             : read_design(design_path);
    return label;
  };
  auto* dcert = command("derive-cert", "derive an obstruction certificate from a design label", [&] {
    const auto label = obstruction_inputs();
    const auto cert = derive_certificate(label, ocfg, threads);
    out << "certificate target=" << ocfg.target.serialize() << " tapes=" << cert.tapes
        << " queries=" << cert.queries.size() << " points=" << cert.points.size()
        << " label_bits=" << cert.label_bits() << "\n";
    if (!out_path.empty()) write_file(out_path, cert.serialize());
    return kExitOk;
  });
  add_obstruction_flags(dcert);
  dcert->add_option("--out", out_path, "write the certificate here");

  bool allow_outside = false;
  std::string cert_path;
  auto* decode = command("decode", "find the counterexample a certificate gives for a circuit", [&] {
    const auto cert = ObstructionCertificate::parse(read_file(cert_path), threads);
    DecodeOptions opts;
    opts.enforce_class = !allow_outside;
    const auto c = Circuit::load(circuit_path);
    try {
      const auto cx = decode_counterexample(cert, c, opts);
      out << "failed " << query_kind_name(cx.query.kind) << " query=" << cx.query_index
          << " points=" << cx.points.size() << "\n";
      for (const auto& p : cx.points) out << "  point " << format_point(p) << "\n";
      out << "direct_witness " << (cx.direct_witness ? std::to_string(*cx.direct_witness) : "none") << "\n";
      return kExitOk;
    } catch (const NoFailingQuery& e) {
      out << "no failing query: " << e.what() << "\n";
      return kExitReject;
    }
  });
  decode->add_option("--cert", cert_path, "certificate file")->required();
  decode->add_option("--circuit", circuit_path, "circuit file")->required();
  decode->add_flag("--allow-outside-class", allow_outside, "skip the class membership check");
  decode->add_option("--threads", threads, "worker threads");

  std::size_t labels = 32;
  bool quick = false;
  auto* harness = command("harness-f", "run the F0-F4 checks on a toy pipeline", [&] {
    const auto label = obstruction_inputs();
    HarnessOptions opts;
    opts.threads = threads;
    opts.f2_labels = labels;
    opts.design_seed = design_seed;
    opts.quick = quick;
    const auto rep = harness_F(label, ocfg, opts);
    out << rep.format();
    bool ok = true;
    for (auto name : {"F0", "F1(a)", "F1(b)", "F3", "F4"}) ok = ok && rep.passed(name);
    return ok ? kExitOk : kExitReject;
  });
  add_obstruction_flags(harness);
  harness->add_option("--labels", labels, "labels sampled for F2");
  harness->add_flag("--quick", quick, "skip the serial re-derivation in F1(a)");

  auto* ttable = command("trivial-table", "counterexample table listing every class circuit", [&] {
    const auto table = trivial_obstruction_table(ClassParams::parse(class_text), Target::parse(target_text));
    out << "rows " << table.rows.size() << " grid_side " << table.grid_side << "\n";
    if (!out_path.empty()) {
      std::string text = "# flipcheck trivial-table class=" + ClassParams::parse(class_text).serialize() +
                         " target=" + Target::parse(target_text).serialize() + "\n";
      for (const auto& row : table.rows) {
        text += "point " + format_point(row.point) + "\n" + row.circuit;
      }
      write_file(out_path, text);
    }
    return kExitOk;
  });
  ttable->add_option("--class", class_text, "circuit class")->required();
  ttable->add_option("--target", target_text, "perm(n) or efun(m,k)");
  ttable->add_option("--out", out_path, "write the table here");

  // trace-tools
  std::uint64_t q = 2;
  std::size_t ext = 2;
  std::string modulus_text, element_text;
  auto* trace = command("trace-tools", "trace form, dual basis and coordinate extraction over F_{q^l}", [&] {
    ExtField field = modulus_text.empty() ? ExtField(q, ext) : ExtField::parse(std::to_string(q) + " " + modulus_text);
    out << "field " << field.serialize() << "\n";
    const auto gram = field.trace_form_gram();
    out << "gram\n";
    for (const auto& row : gram) {
      out << " ";
      for (auto v : row) out << " " << v;
      out << "\n";
    }
    const auto det = determinant(field.base(), gram);
    out << "gram_det " << det << "\n";
    if (det == 0) {
      out << "singular trace form\n";
      return kExitReject;
    }
    const auto dual = field.dual_basis();
    bool delta_ok = true;
    for (std::size_t i = 0; i < dual.size(); ++i) {
      out << "dual[" << i << "] " << field.to_string(dual[i]) << "\n";
      for (std::size_t j = 0; j < dual.size(); ++j)
        delta_ok = delta_ok && field.trace(field.mul(dual[i], field.basis()[j])) == (i == j ? 1u : 0u);
    }
    out << "dual_delta " << (delta_ok ? "ok" : "FAILED") << "\n";
    if (!element_text.empty()) {
      std::vector<std::uint64_t> coeffs;
      for (const auto& v : parse_bigints(element_text)) {
        if (v < 0 || !v.fits_ulong_p()) throw ConfigError("element coefficients must be non-negative");
        coeffs.push_back(v.get_ui());
      }
      const auto x = field.from_coeffs(coeffs);
      const auto back = field.extract_coeffs(x);
      out << "element " << field.to_string(x) << " coords";
      for (auto c : back) out << " " << c;
      out << "\n";
      delta_ok = delta_ok && field.from_basis_coords(back) == x;
    }
    return delta_ok ? kExitOk : kExitReject;
  });
  trace->add_option("--q", q, "prime");
  trace->add_option("--l", ext, "extension degree");
  trace->add_option("--modulus", modulus_text, "explicit modulus coefficients f_0 ... f_l");
  trace->add_option("--element", element_text, "element in the power basis, comma-separated");

  try {
    const auto args = expand_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto& [sub, fn] : actions)
      if (sub->parsed()) return fn();
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitReject;
  } catch (const std::bad_alloc&) {
    err << "budget: out of memory\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace flipcheck
