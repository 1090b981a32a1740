// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include <CLI11.hpp>

#include "frame_io.hpp"
#include "rhframes/errors.hpp"
#include "rhframes/radon_hurwitz.hpp"
#include "rhframes/symmetry.hpp"

namespace rhf::cli {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Field field_of(const std::string& s) { return s == "R" ? Field::Real : Field::Complex; }

struct Options {
  std::string field = "R";
  std::size_t r = 1;
  std::size_t n = 3;
  std::string variant = "generic";
  std::string out_path;
  std::string frame_path;
  std::string cert_path;
  std::string perm;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::size_t k = 1;
  std::size_t trials = 100;
  bool total = false;
};

void emit_json(const io::Json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << j.dump(1) << '\n';
  else
    io::write_json(path, j);
}

int cmd_rho(const Options& o, std::ostream& out) {
  const RHDecomposition dec = decompose_r(o.r);
  out << "rho=" << rho_number(field_of(o.field), o.r) << " a=" << dec.a << " b=" << dec.b
      << " c=" << dec.c << '\n';
  return kPass;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto variant = parse_variant(o.variant);
  const FusionFrame frame = build_eitff(field_of(o.field), o.r, o.n, *variant);
  const io::Json meta = {{"variant", o.variant}, {"field", o.field}, {"r", o.r},
                         {"n", o.n},             {"seed", nullptr}};
  emit_json(io::frame_to_json(frame, meta), o.out_path, out);
  if (!o.out_path.empty())
    out << "wrote EITFF(" << frame.d() << "," << frame.r() << "," << frame.n() << ") to "
        << o.out_path << '\n';
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  const VerificationReport rep = verify_eitff(frame, o.tol);
  out << "tightness=" << sci(rep.tightness_residual)
      << " equiisoclinic=" << sci(rep.equiisoclinic_residual)
      << " welch_gap=" << sci(rep.welch_gap) << " coherence=" << num(rep.block_coherence)
      << " gerzon=" << (rep.gerzon_ok ? "ok" : "fail") << '\n';
  out << "isometry=" << sci(rep.isometry_residual) << " welch_bound=" << num(rep.welch_bound)
      << " tol=" << sci(rep.tolerance) << '\n';
  out << "result=" << (rep.pass() ? "pass" : "fail") << '\n';
  return rep.pass() ? kPass : kVerifyFail;
}

int cmd_naimark(const Options& o, std::ostream& out) {
  const io::FrameFile in = io::read_frame(o.frame_path);
  const FusionFrame comp = naimark_complement(in.frame);
  const io::Json meta = {{"source", "naimark"}, {"parent", in.metadata}};
  emit_json(io::frame_to_json(comp, meta), o.out_path, out);
  if (!o.out_path.empty())
    out << "wrote complement (" << comp.d() << "," << comp.r() << "," << comp.n() << ") to "
        << o.out_path << '\n';
  return kPass;
}

int cmd_angles(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  for (const PairAngles& p : principal_angles(frame)) {
    out << "pair=" << p.i + 1 << "," << p.j + 1 << " angles=";
    for (std::size_t t = 0; t < p.theta.size(); ++t) out << (t ? "," : "") << num(p.theta[t]);
    out << '\n';
  }
  return kPass;
}

Permutation parse_perm(const std::string& text, std::size_t n) {
  Permutation p;
  try {
    p = Permutation::parse_one_line(text);
  } catch (const InvalidInputError& e) {
    throw CLI::ValidationError("--perm", e.what());
  }
  if (p.n() != n)
    throw CLI::ValidationError("--perm", "permutation acts on " + std::to_string(p.n()) +
                                             " points but the frame has n=" + std::to_string(n));
  return p;
}

int cmd_sym_witness(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  const Permutation sigma = parse_perm(o.perm, frame.n());
  const auto cert = find_witness(frame, sigma, o.tol, o.seed);
  if (!cert) {
    out << "witness=none perm=\"" << sigma.one_line() << "\" (numerically-decided)\n";
    return kVerifyFail;
  }
  if (o.out_path.empty()) {
    out << io::certificate_to_json(*cert).dump(1) << '\n';
  } else {
    io::write_json(o.out_path, io::certificate_to_json(*cert));
    out << "witness=found perm=\"" << sigma.one_line() << "\" residual=" << sci(cert->residual)
        << '\n';
  }
  return kPass;
}

int cmd_sym_check(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  const SymmetryCertificate cert = io::certificate_from_json(io::read_json(o.cert_path));
  if (cert.sigma.n() != frame.n() || cert.upsilon.rows() != frame.d() ||
      cert.upsilon.cols() != frame.d())
    throw io::FormatError("certificate does not match the frame's n or d");
  const double res = check_certificate(frame, cert);
  const double unit = unitarity_residual(cert.upsilon);
  const bool ok = res <= o.tol && unit <= o.tol;
  out << "residual=" << sci(res) << " unitarity=" << sci(unit)
      << " result=" << (ok ? "pass" : "fail") << '\n';
  return ok ? kPass : kVerifyFail;
}

int cmd_sym_probe(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  const ProbeResult res = probe_symmetry(frame, o.tol, o.seed);
  out << "symmetry=" << to_string(res.cls) << " (numerically-decided)\n";
  return kPass;
}

int cmd_exists(const Options& o, std::ostream& out) {
  const Field f = field_of(o.field);
  const ExistenceVerdict v =
      o.total ? totally_symmetric_verdict(f, o.r, o.n) : eitff_verdict(f, o.r, o.n);
  out << to_string(v.value) << " rule=\"" << v.rule << "\" rho=" << rho_number(f, o.r) << '\n';
  return kPass;
}

int cmd_omp_demo(const Options& o, std::ostream& out) {
  const FusionFrame frame = io::read_frame(o.frame_path).frame;
  if (o.k > frame.n()) throw CLI::ValidationError("--k", "k exceeds the number of blocks");
  const std::size_t r = frame.r();
  const bool cplx = frame.field() == Field::Complex;
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal;

  std::size_t recovered = 0;
  double worst = 0.0;
  std::vector<std::size_t> order(frame.n());
  for (std::size_t t = 0; t < o.trials; ++t) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> support(order.begin(), order.begin() + o.k);
    std::sort(support.begin(), support.end());

    std::vector<Mat> truth;
    Mat y = Mat::zeros(frame.d(), 1, frame.field());
    for (std::size_t b : support) {
      Mat c(frame.field(), r, 1);
      for (std::size_t q = 0; q < r; ++q)
        c.set(q, 0, cplx ? Complex(normal(rng), normal(rng)) : Complex(normal(rng)));
      y = y + matmul(frame[b], c);
      truth.push_back(std::move(c));
    }

    auto found = block_omp_recover(frame, y, o.k);
    std::sort(found.begin(), found.end(),
              [](const BlockCoefficient& a, const BlockCoefficient& b) { return a.block < b.block; });
    bool ok = found.size() == support.size();
    double err = 0.0;
    for (std::size_t q = 0; ok && q < found.size(); ++q) {
      ok = found[q].block == support[q];
      if (ok) err = std::max(err, max_abs_diff(found[q].coeff, truth[q]));
    }
    if (ok && err <= 1e-8) ++recovered;
    if (ok) worst = std::max(worst, err);
  }
  const double mu = block_coherence(frame);
  out << "recovered=" << recovered << "/" << o.trials << " max_coeff_error=" << sci(worst)
      << " coherence=" << num(mu)
      << " guaranteed=" << (omp_recovery_guaranteed(mu, o.k) ? "yes" : "no") << '\n';
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radon-Hurwitz equi-isoclinic tight fusion frames", "eitff"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "R or C")->required()->check(CLI::IsMember({"R", "C"}));
    c->add_option("--r", o.r, "subspace dimension")->required()->check(CLI::PositiveNumber);
  };
  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", o.n, "number of subspaces")->required()->check(CLI::Range(3, 1 << 20));
  };
  auto add_frame = [&](CLI::App* c) {
    c->add_option("frame", o.frame_path, "frame JSON file")->required();
  };
  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
  };

  auto* rho = app.add_subcommand("rho", "Radon-Hurwitz number and decomposition of r");
  add_field(rho);

  auto* build = app.add_subcommand("build", "construct an EITFF(2r, r, n)");
  add_field(build);
  add_n(build);
  build->add_option("--variant", o.variant, "generic, skew or totally_symmetric")
      ->check(CLI::IsMember({"generic", "skew", "totally_symmetric"}));
  build->add_option("--out", o.out_path, "output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "check tightness, equi-isoclinism and Welch equality");
  add_frame(verify);
  add_tol(verify);

  auto* naimark = app.add_subcommand("naimark", "Naimark complement of a tight frame");
  add_frame(naimark);
  naimark->add_option("--out", o.out_path, "output file (stdout if omitted)");

  auto* angles = app.add_subcommand("angles", "principal angles of every pair");
  add_frame(angles);

  auto* sym = app.add_subcommand("sym", "symmetry certificates");
  sym->require_subcommand(1);
  auto* witness = sym->add_subcommand("witness", "search for a unitary realizing --perm");
  add_frame(witness);
  witness->add_option("--perm", o.perm, "one-line image, e.g. \"2 1 3 4\"")->required();
  witness->add_option("--out", o.out_path, "certificate file (stdout if omitted)");
  witness->add_option("--seed", o.seed, "seed for the null-space combination");
  add_tol(witness);
  auto* check = sym->add_subcommand("check", "check a certificate against a frame");
  add_frame(check);
  check->add_option("cert", o.cert_path, "certificate JSON file")->required();
  add_tol(check);
  auto* probe = sym->add_subcommand("probe", "classify the symmetry group (n <= 8)");
  add_frame(probe);
  probe->add_option("--seed", o.seed, "seed");
  add_tol(probe);

  auto* exists = app.add_subcommand("exists", "existence verdict");
  add_field(exists);
  add_n(exists);
  exists->add_flag("--total", o.total, "ask about total symmetry");

  auto* omp = app.add_subcommand("omp", "block orthogonal matching pursuit");
  omp->require_subcommand(1);
  auto* demo = omp->add_subcommand("demo", "random block-sparse recovery trials");
  add_frame(demo);
  demo->add_option("--k", o.k, "blocks per signal")->check(CLI::PositiveNumber);
  demo->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  demo->add_option("--seed", o.seed, "seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (rho->parsed()) return cmd_rho(o, out);
    if (build->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (naimark->parsed()) return cmd_naimark(o, out);
    if (angles->parsed()) return cmd_angles(o, out);
    if (witness->parsed()) return cmd_sym_witness(o, out);
    if (check->parsed()) return cmd_sym_check(o, out);
    if (probe->parsed()) return cmd_sym_probe(o, out);
    if (exists->parsed()) return cmd_exists(o, out);
    if (demo->parsed()) return cmd_omp_demo(o, out);
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kIoError;
  } catch (const InfeasibleError& e) {
    out << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const UnknownFeasibilityError& e) {
    out << "unknown: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DomainError& e) {
    err << "out of range: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InvalidInputError& e) {
    // structurally valid file whose contents fail a precondition (e.g. not tight)
    err << "input rejected: " << e.what() << '\n';
    return kVerifyFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFail;
  }
}

}  // namespace rhf::cli
