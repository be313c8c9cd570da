#include "condmds/svg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "condmds/errors.hpp"

namespace condmds {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kPad = 40.0;

std::string fixed(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Returns [lo, hi] widened by 5% on each side; a degenerate range becomes unit width.
std::pair<double, double> padded_range(const Eigen::VectorXd& x) {
  double lo = x.minCoeff(), hi = x.maxCoeff();
  double span = hi - lo;
  if (!(span > 0.0)) {
    lo -= 0.5;
    hi += 0.5;
    span = 1.0;
  }
  return {lo - 0.05 * span, hi + 0.05 * span};
}

}  // namespace

std::string render_svg(const Matrix& u, const std::vector<std::string>& labels) {
  if (u.cols() != 2) {
    throw InputError("plotting requires a 2-D embedding (got p = " + std::to_string(u.cols()) +
                     "); use --p 2 or --plot false");
  }
  if (static_cast<std::size_t>(u.rows()) != labels.size()) throw InputError("svg: one label per point required");
  require_finite(u, "svg");

  const auto [x0, x1] = padded_range(u.col(0));
  const auto [y0, y1] = padded_range(u.col(1));
  const double inner = kCanvas - 2 * kPad;
  auto sx = [&](double x) { return kPad + (x - x0) / (x1 - x0) * inner; };
  auto sy = [&](double y) { return kPad + (y1 - y) / (y1 - y0) * inner; };

  const std::string size = fixed(kCanvas);
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
       size + " " + size + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";
  s += "<rect x=\"" + fixed(kPad) + "\" y=\"" + fixed(kPad) + "\" width=\"" + fixed(inner) + "\" height=\"" +
       fixed(inner) + "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  s += "<text x=\"" + fixed(kPad) + "\" y=\"" + fixed(kCanvas - kPad / 3) + "\" font-size=\"10\" fill=\"#555\">x: [" +
       fixed(x0) + ", " + fixed(x1) + "]  y: [" + fixed(y0) + ", " + fixed(y1) + "]</text>\n";
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const std::string cx = fixed(sx(u(i, 0))), cy = fixed(sy(u(i, 1)));
    s += "<circle class=\"point\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    s += "<text class=\"label\" x=\"" + fixed(sx(u(i, 0)) + 6) + "\" y=\"" + fixed(sy(u(i, 1)) - 6) +
         "\" font-size=\"12\">" + escape(labels[std::size_t(i)]) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

void emit_svg(const Matrix& u, const std::vector<std::string>& labels, const std::string& path) {
  const std::string text = render_svg(u, labels);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace condmds
