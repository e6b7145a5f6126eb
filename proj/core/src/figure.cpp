#include "ifsembed/figure.hpp"

#include <sstream>

#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

constexpr int kDigits = 6;

std::string num(const Rational& r) { return to_decimal(r, kDigits); }

// Planar view of a box: 1D boxes become thin strips of height `strip`.
struct Rect {
  Rational x;
  Rational y;
  Rational w;
  Rational h;
};

Rect to_rect(const Box& b, const Rational& strip) {
  if (b.dimension() == 1) {
    return Rect{b.lower()[0], -strip, b.upper()[0] - b.lower()[0], strip};
  }
  return Rect{b.lower()[0], -b.upper()[1], b.upper()[0] - b.lower()[0], b.upper()[1] - b.lower()[1]};
}

std::string rect_attrs(const Rect& r) {
  return "x=\"" + num(r.x) + "\" y=\"" + num(r.y) + "\" width=\"" + num(r.w) + "\" height=\"" +
         num(r.h) + "\"";
}

}  // namespace

std::string export_figure(const Ifs& ifs, std::size_t depth, FigureStyle style,
                          const SearchLimits& limits) {
  if (ifs.dimension() > 2) throw PreconditionError("figures are limited to dimension 1 and 2");
  const Box& base = ifs.base_box();
  const Rational width = base.upper()[0] - base.lower()[0];
  const Rational span = (ifs.dimension() == 2) ? max(width, base.upper()[1] - base.lower()[1]) : width;
  const Rational strip = span / Rational(40);
  const Rational margin = span / Rational(20);
  const Rational stroke = span / Rational(300);

  const Rect frame = to_rect(base, strip);
  const Rational vx = frame.x - margin;
  const Rational vy = frame.y - margin;
  const Rational vw = frame.w + 2 * margin;
  const Rational vh = frame.h + 2 * margin;
  const Rational px_width(600);
  const Rational px_height = px_width * vh / vw;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(px_width)
      << "\" height=\"" << to_decimal(px_height, 0) << "\" viewBox=\"" << num(vx) << ' ' << num(vy)
      << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
  out << "  <title>" << (style == FigureStyle::kBoxes ? "cover" : "attractor points")
      << ", depth " << depth << ", " << ifs.size() << " maps</title>\n";
  out << "  <rect class=\"base\" " << rect_attrs(frame) << " fill=\"none\" stroke=\"black\""
      << " stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke) << ' '
      << num(2 * stroke) << "\"/>\n";

  if (style == FigureStyle::kBoxes) {
    out << "  <g class=\"cells\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke)
        << "\">\n";
    for (const auto& entry : cover(ifs, depth, limits)) {
      out << "    <rect data-word=\"" << entry.word.str(ifs.size()) << "\" "
          << rect_attrs(to_rect(entry.box, strip)) << "/>\n";
    }
  } else {
    const Rational radius = span / Rational(600);
    out << "  <g class=\"points\" fill=\"black\" stroke=\"none\">\n";
    for (const auto& p : attractor_points(ifs, depth, limits)) {
      const Rational cy = ifs.dimension() == 2 ? -p.point[1] : -strip / Rational(2);
      out << "    <circle cx=\"" << num(p.point[0]) << "\" cy=\"" << num(cy) << "\" r=\""
          << num(radius) << "\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace ifsembed
