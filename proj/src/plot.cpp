#include <filesystem>
#include <fstream>
#include <iomanip>

#include "suite_support.hpp"
#include "twistor/twistor_lines.hpp"

namespace twistor::cli {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << std::setprecision(17);
  return out;
}

void put(std::ofstream& out, Complex z) { out << z.real() << ',' << z.imag(); }

void put_sphere(std::ofstream& out, const SpherePoint& p) {
  put(out, p.z0());
  out << ',';
  put(out, p.z1());
}

}  // namespace

void emit_plot_data(const RunConfig& cfg, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");

  // Twistor-line traces on X_0 in the affine chart.
  {
    auto out = open_csv(fs::path(dir) / "lines.csv");
    out << "t_re,t_im,u_re,u_im,v_re,v_im,xi_re,xi_im,eta_re,eta_im\n";
    const CoincidentModel m(cfg.n);
    const auto ts = sphere_lattice(200);
    for (std::uint64_t k = 0; k < 5; ++k) {
      const TwistorLineParams L = random_line_params(cfg.seed, k);
      for (const auto& t : ts) {
        const ChartCoords c = to_chart(line_eval(m, L, t), {}, m.bidegrees());
        put(out, t.value());
        out << ',';
        put(out, c.u);
        out << ',';
        put(out, c.v);
        out << ',';
        put(out, c.x / c.z);
        out << ',';
        put(out, c.y / c.z);
        out << '\n';
      }
    }
    if (!out) throw IoError("write failed for lines.csv");
  }

  // Discriminant curves of the s = 1 model, one point over each u of a lattice.
  std::vector<std::pair<std::string, ProjectiveModel>> models;
  if (!cfg.monopoles.empty()) {
    const ProjectiveModel model = fiber_model(cfg);
    models.emplace_back("lebrun", model);
    double lambda = 0.0;
    if (normalized_limit_form(model.curves[0], lambda)) models.emplace_back("limit", limit_model(model));
  } else {
    models.emplace_back("coincident", CoincidentModel(cfg.n).model());
  }
  {
    auto out = open_csv(fs::path(dir) / "discriminant.csv");
    out << "model,curve,u0_re,u0_im,u1_re,u1_im,v0_re,v0_im,v1_re,v1_im\n";
    const auto us = sphere_lattice(200);
    for (const auto& [name, model] : models) {
      for (int i = 0; i < model.n; ++i) {
        const OneOneCurve k = model.curves[i].normalized();
        for (const auto& u : us) {
          const Complex l1 = k.a * u.z0() + k.c * u.z1();
          const Complex l2 = k.b * u.z0() + k.d * u.z1();
          if (std::abs(l1) + std::abs(l2) < 1e-12) continue;  // a whole ruling lies on the curve
          out << name << ',' << i << ',';
          put_sphere(out, u);
          out << ',';
          put_sphere(out, SpherePoint(-l2, l1));
          out << '\n';
        }
      }
    }
    if (!out) throw IoError("write failed for discriminant.csv");
  }
  {
    auto out = open_csv(fs::path(dir) / "singular_points.csv");
    out << "model,i,j,u0_re,u0_im,u1_re,u1_im,v0_re,v0_im,v1_re,v1_im,classification\n";
    for (const auto& [name, model] : models) {
      std::vector<SingularPointReport> pts;
      try {
        pts = singular_points(model);
      } catch (const std::exception&) {
        continue;  // X_0: all curves coincide, the singular locus is a curve
      }
      for (const auto& p : pts) {
        out << name << ',' << p.curve_indices.first << ',' << p.curve_indices.second << ',';
        put_sphere(out, p.base.u);
        out << ',';
        put_sphere(out, p.base.v);
        out << ',' << to_string(p.classification) << '\n';
      }
    }
    if (!out) throw IoError("write failed for singular_points.csv");
  }
}

}  // namespace twistor::cli
