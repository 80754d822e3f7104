#include "bcov/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bcov/rat.hpp"

namespace bcov {

namespace {

std::string num6(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << v;
  return os.str();
}

double approx(const Rat& r) { return r.get_d(); }

struct View {
  double x0, x1, y0, y1;  // world box
  static constexpr double W = 640, H = 480, M = 40;

  double px(double x) const { return M + (x - x0) / (x1 - x0) * (W - 2 * M); }
  double py(double y) const { return H - M - (y - y0) / (y1 - y0) * (H - 2 * M); }
};

}  // namespace

std::string render_svg(const PLCovering& cov, const BranchReport& rep) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    } else {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  };
  for (const auto& s : cov.segments) {
    grow(approx(s.x_lo), approx(s.y_at(s.x_lo)));
    grow(approx(s.x_hi), approx(s.y_at(s.x_hi)));
  }
  for (const auto& b : cov.base) {
    grow(approx(b.lo), 0);
    grow(approx(b.hi), 0);
  }
  /* reserve a strip below the picture for the base bar and the step function */
  double band = std::max(1.0, (y1 - y0) * 0.35);
  double base_y = y0 - band * 0.35;
  double step_y0 = y0 - band;
  y0 -= band * 1.15;
  if (x1 - x0 < 1e-9) x1 = x0 + 1;
  if (y1 - y0 < 1e-9) y1 = y0 + 1;
  View v{x0, x1, y0, y1};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
        "viewBox=\"0 0 640 480\">\n";
  os << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  for (const auto& s : cov.segments)
    os << "<line x1=\"" << num6(v.px(approx(s.x_lo))) << "\" y1=\""
       << num6(v.py(approx(s.y_at(s.x_lo)))) << "\" x2=\"" << num6(v.px(approx(s.x_hi)))
       << "\" y2=\"" << num6(v.py(approx(s.y_at(s.x_hi))))
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& b : cov.base)
    os << "<line x1=\"" << num6(v.px(approx(b.lo))) << "\" y1=\"" << num6(v.py(base_y))
       << "\" x2=\"" << num6(v.px(approx(b.hi))) << "\" y2=\"" << num6(v.py(base_y))
       << "\" stroke=\"steelblue\" stroke-width=\"5\"/>\n";
  int max_count = 1;
  for (const auto& st : rep.d_profile) max_count = std::max(max_count, st.count);
  for (const auto& st : rep.d_profile) {
    double h = step_y0 + (base_y - band * 0.05 - step_y0) *
                             (static_cast<double>(st.count) / max_count);
    os << "<line x1=\"" << num6(v.px(approx(st.lo))) << "\" y1=\"" << num6(v.py(h))
       << "\" x2=\"" << num6(v.px(approx(st.hi))) << "\" y2=\"" << num6(v.py(h))
       << "\" stroke=\"darkgreen\" stroke-width=\"3\"/>\n"
       << "<text x=\"" << num6(v.px((approx(st.lo) + approx(st.hi)) / 2)) << "\" y=\""
       << num6(v.py(h) - 4) << "\" font-size=\"12\" text-anchor=\"middle\">" << st.count
       << "</text>\n";
  }
  for (const auto& p : rep.B)
    os << "<circle cx=\"" << num6(v.px(approx(p.x))) << "\" cy=\"" << num6(v.py(approx(p.y)))
       << "\" r=\"5\" fill=\"crimson\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_svg(const PLCovering& cov, const BranchReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write SVG to '" + path + "'");
  out << render_svg(cov, rep);
  if (!out.good()) throw InputError("cannot write SVG to '" + path + "'");
}

}  // namespace bcov
