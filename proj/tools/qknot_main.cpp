// Command-line front end: ideal | classify | affine | two-bridge | sample | verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qknot/affine.hpp"
#include "qknot/classify.hpp"
#include "qknot/errors.hpp"
#include "qknot/io.hpp"
#include "qknot/sampling.hpp"
#include "qknot/variety.hpp"

namespace {

using namespace qknot;

struct CommonOpts {
  std::string presentation_text;
  std::string presentation_file;
  std::vector<long> two_bridge_pq;
  double tol = 1e-9;
  double boundary_tol = 1e-9;
  std::string format = "text";
  std::string out_path;
};

void add_presentation_opts(CLI::App* cmd, CommonOpts& o) {
  auto* p = cmd->add_option("-p,--presentation", o.presentation_text,
                            "presentation text, e.g. \"aba=bab\" or a relator word");
  auto* f = cmd->add_option("--pres-file", o.presentation_file,
                            "file with presentation text or JSON {\"relator\":..} / {\"lhs\":..,\"rhs\":..}");
  auto* t = cmd->add_option("--two-bridge", o.two_bridge_pq, "2-bridge parameters P Q")
                ->expected(2);
  p->excludes(f)->excludes(t);
  f->excludes(t);
}

void add_common_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol", o.tol, "verification tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--boundary-tol", o.boundary_tol, "region boundary tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

Presentation load_presentation(const CommonOpts& o) {
  if (!o.two_bridge_pq.empty()) return two_bridge(o.two_bridge_pq[0], o.two_bridge_pq[1]);
  if (!o.presentation_file.empty()) {
    std::ifstream f(o.presentation_file);
    if (!f) throw IoError("cannot read " + o.presentation_file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      return presentation_from_json(json::parse(text));
    return parse_presentation(text);
  }
  if (!o.presentation_text.empty()) return parse_presentation(o.presentation_text);
  throw ArgumentError("no presentation given (use -p, --pres-file or --two-bridge)");
}

void write_output(const CommonOpts& o, const std::string& payload) {
  if (o.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw IoError("cannot open " + o.out_path + " for writing");
  f << payload;
  if (!f.good()) throw IoError("write failure on " + o.out_path);
}

std::string render_ideal(const CIdeal& ci, bool trace_coords, const std::string& format) {
  if (format == "json") return cideal_to_json(ci, trace_coords).dump(2) + "\n";
  std::ostringstream os;
  os << "presentation: " << ci.pres.str() << "\n";
  if (!ci.warning.empty()) os << "warning: " << ci.warning << "\n";
  os << "raw = (";
  for (std::size_t i = 0; i < 4; ++i)
    os << (i ? ", " : "") << to_string(ci.raw[i], {"x", "y", "s"}, true);
  os << ")\n";
  os << "I = < ";
  for (std::size_t i = 0; i < ci.simplified.gens.size(); ++i)
    os << (i ? ", " : "") << to_string(ci.simplified.gens[i], {"x", "y", "s"}, true);
  os << " >";
  if (ci.simplified.gens.empty()) os << " (all (x,y))";
  os << "\n";
  if (trace_coords) {
    os << "trace coords: < ";
    for (std::size_t i = 0; i < ci.simplified.gens.size(); ++i)
      os << (i ? ", " : "")
         << to_string(to_trace_coords(ci.simplified.gens[i]), {"x'", "z", "s"}, true);
    os << " >\n";
  }
  return os.str();
}

std::string render_classified(const ClassifiedPoint& cp, const std::string& format) {
  if (format == "json") return classified_to_json(cp).dump(2) + "\n";
  std::ostringstream os;
  os << "(x, y) = (" << format_double(cp.x) << ", " << format_double(cp.y) << ")  region "
     << region_tag(cp.region) << "\n";
  if (!cp.pair) {
    os << "  no irreducible or almost-irreducible c-representation at this point\n";
    return os.str();
  }
  const auto& pc = *cp.pair;
  auto show_quat = [&](const char* name, const NumQuaternion& q) {
    const char* units = q.par == kHamilton ? "i j ij" : "I J IJ";
    os << "  " << name << " = ";
    json arr = json::array();
    for (const cplx& z : {q.alpha, q.beta, q.gamma, q.delta}) arr.push_back(complex_to_json(z));
    os << arr.dump() << "  (coeffs of 1 " << units << ")\n";
  };
  os << "  algebra (" << pc.A.par.mu << "," << pc.A.par.nu << ") over "
     << (pc.complex_field ? "C" : "R") << ", k = " << pc.field_desc << "\n";
  show_quat("A", pc.A);
  show_quat("B", pc.B);
  auto show_mat2 = [&](const char* name, const Mat2& m) {
    os << "  " << name << " -> [[" << complex_to_json(m[0]).dump() << ", "
       << complex_to_json(m[1]).dump() << "], [" << complex_to_json(m[2]).dump() << ", "
       << complex_to_json(m[3]).dump() << "]]\n";
  };
  show_mat2("2x2 A", embed_2x2(pc.A));
  show_mat2("2x2 B", embed_2x2(pc.B));
  auto [ma, mb] = so_matrix_pair(pc, 1e-6);
  auto show_mat3 = [&](const char* name, const Mat3& m) {
    os << "  " << name << " -> [";
    for (int r = 0; r < 3; ++r) {
      os << (r ? ", [" : "[");
      for (int c = 0; c < 3; ++c)
        os << (c ? ", " : "") << complex_to_json(m[static_cast<std::size_t>(3 * r + c)]).dump();
      os << "]";
    }
    os << "]\n";
  };
  show_mat3("3x3 A", ma);
  show_mat3("3x3 B", mb);
  if (cp.invariant)
    os << "  invariant: " << cp.invariant->kind << " = " << format_double(cp.invariant->value)
       << "\n";
  os << "  reducibility: " << pair_class_tag(cp.reducibility) << "\n";
  if (cp.residual) os << "  relator residual: " << format_double(*cp.residual) << "\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"c-representation varieties of two-generator groups in quaternion algebras"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* cmd_ideal = app.add_subcommand("ideal", "c-representation ideal I_G^c");
  bool trace_coords = false;
  add_presentation_opts(cmd_ideal, o);
  add_common_opts(cmd_ideal, o);
  cmd_ideal->add_flag("--trace-coords", trace_coords, "also print the (x', z) form");

  auto* cmd_classify = app.add_subcommand("classify", "classify real points of the variety");
  double cx = 0.0, cy = 0.0;
  bool have_y = false;
  add_presentation_opts(cmd_classify, o);
  add_common_opts(cmd_classify, o);
  cmd_classify->add_option("--x", cx, "x coordinate")->required();
  auto* yopt = cmd_classify->add_option("--y", cy, "y coordinate (default: solve for all branches)");

  auto* cmd_affine = app.add_subcommand("affine", "affine c-representation ideal I_aG^c");
  bool minus_sign = false;
  add_presentation_opts(cmd_affine, o);
  add_common_opts(cmd_affine, o);
  cmd_affine->add_flag("--minus-sign", minus_sign, "use the sB- - (A-B-)- normal form");

  auto* cmd_tb = app.add_subcommand("two-bridge", "standard 2-bridge knot presentation");
  std::vector<long> tb_pq;
  cmd_tb->add_option("p_q", tb_pq, "P Q")->expected(2)->required();
  add_common_opts(cmd_tb, o);

  auto* cmd_sample = app.add_subcommand("sample", "sample the real variety on an x grid");
  double x_min = -2.0, x_max = 2.0, step = 0.01;
  add_presentation_opts(cmd_sample, o);
  add_common_opts(cmd_sample, o);
  cmd_sample->add_option("--x-min", x_min, "grid start")->required();
  cmd_sample->add_option("--x-max", x_max, "grid end")->required();
  cmd_sample->add_option("--step", step, "grid step")->required();

  auto* cmd_verify = app.add_subcommand("verify", "construct pairs and check the relator numerically");
  double vx = 0.0, vy = 0.0;
  add_presentation_opts(cmd_verify, o);
  add_common_opts(cmd_verify, o);
  cmd_verify->add_option("--x", vx, "x coordinate")->required();
  auto* vyopt = cmd_verify->add_option("--y", vy, "y coordinate (default: all branches)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_ideal->parsed()) {
      CIdeal ci = c_ideal(load_presentation(o));
      write_output(o, render_ideal(ci, trace_coords, o.format));
      return 0;
    }
    if (cmd_classify->parsed() || cmd_verify->parsed()) {
      bool verify_mode = cmd_verify->parsed();
      double x = cmd_verify->parsed() ? vx : cx;
      have_y = cmd_verify->parsed() ? vyopt->count() > 0 : yopt->count() > 0;
      double ygiven = cmd_verify->parsed() ? vy : cy;
      CIdeal ci = c_ideal(load_presentation(o));
      std::vector<double> ys;
      if (have_y)
        ys.push_back(ygiven);
      else if (ci.simplified.gens.empty())
        throw ArgumentError("the ideal is zero, every y lies on the variety; pass --y");
      else
        ys = branches_at(ci, x, o.tol);
      if (ys.empty()) {
        write_output(o, "no real branch at x = " + format_double(x) + "\n");
        return 0;
      }
      std::string payload;
      json jarr = json::array();
      for (double y : ys) {
        ClassifiedPoint cp = classify_full(ci, x, y, o.tol, o.boundary_tol);
        if (o.format == "json")
          jarr.push_back(classified_to_json(cp));
        else if (verify_mode) {
          std::ostringstream os;
          os << "x = " << format_double(x) << "  y = " << format_double(y) << "  region "
             << region_tag(cp.region) << "  residual "
             << (cp.residual ? format_double(*cp.residual) : "n/a") << "\n";
          payload += os.str();
        } else {
          payload += render_classified(cp, o.format);
        }
      }
      if (o.format == "json") payload = jarr.dump(2) + "\n";
      write_output(o, payload);
      return 0;
    }
    if (cmd_affine->parsed()) {
      AffineIdeal ai = affine_ideal(load_presentation(o), minus_sign);
      if (o.format == "json") {
        write_output(o, affine_to_json(ai).dump(2) + "\n");
      } else {
        std::ostringstream os;
        auto show = [&](const char* name, const std::vector<Poly>& v) {
          os << name << " = < ";
          for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << to_string(v[i], {"x", "y", "s"}, true);
          os << " >\n";
        };
        show("p", ai.p_gens);
        show("q", ai.q_gens);
        show("groebner", groebner(ai.combined).gens);
        write_output(o, os.str());
      }
      return 0;
    }
    if (cmd_tb->parsed()) {
      Presentation pres = two_bridge(tb_pq[0], tb_pq[1]);
      if (o.format == "json")
        write_output(o, presentation_to_json(pres).dump(2) + "\n");
      else
        write_output(o, pres.label + ": " + pres.str() + "\n");
      return 0;
    }
    if (cmd_sample->parsed()) {
      if (step <= 0) throw ArgumentError("step must be positive");
      CIdeal ci = c_ideal(load_presentation(o));
      auto samples = sample_variety(ci, mpq_class(x_min), mpq_class(x_max), mpq_class(step),
                                    1e-12, o.boundary_tol);
      if (o.format == "json") {
        write_output(o, samples_to_json(samples).dump(2) + "\n");
      } else {
        std::ostringstream os;
        emit_csv(samples, os);
        write_output(o, os.str());
      }
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyWordError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OffVariety& e) {
    std::cerr << "error: off variety: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegeneratePoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
