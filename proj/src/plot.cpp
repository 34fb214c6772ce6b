#include "soccuts/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

constexpr double kSize = 600;
constexpr double kMargin = 20;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double lo1, hi1, lo2, hi2;

  double Px(double x) const { return kMargin + (x - lo1) / (hi1 - lo1) * kSize; }
  double Py(double y) const { return kMargin + (hi2 - y) / (hi2 - lo2) * kSize; }
};

struct Pt {
  double x, y;
};

struct Segment {
  Pt a, b;
};

// l(x) - ||rest(x)||, non-negative exactly on the block.
double Slack(const ConicBlock2D& block, double x, double y) {
  const Matrix& A = block.A();
  const Vec& b = block.b();
  double sq = 0, last = 0;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    double v = A(r, 0).get_d() * x + A(r, 1).get_d() * y - b[r].get_d();
    if (r + 1 == A.rows()) {
      last = v;
    } else {
      sq += v * v;
    }
  }
  return last - std::sqrt(sq);
}

std::vector<Segment> TraceBoundary(const ConicBlock2D& block, const Frame& f, int res) {
  const double h1 = (f.hi1 - f.lo1) / res, h2 = (f.hi2 - f.lo2) / res;
  std::vector<std::vector<double>> v(res + 1, std::vector<double>(res + 1));
  for (int i = 0; i <= res; ++i) {
    for (int j = 0; j <= res; ++j) v[i][j] = Slack(block, f.lo1 + i * h1, f.lo2 + j * h2);
  }
  std::vector<Segment> out;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const int ci[4] = {i, i + 1, i + 1, i};
      const int cj[4] = {j, j, j + 1, j + 1};
      std::vector<Pt> hits;
      for (int e = 0; e < 4; ++e) {
        int a = e, b = (e + 1) % 4;
        double va = v[ci[a]][cj[a]], vb = v[ci[b]][cj[b]];
        if ((va >= 0) == (vb >= 0)) continue;
        double t = va / (va - vb);
        hits.push_back({f.lo1 + (ci[a] + t * (ci[b] - ci[a])) * h1,
                        f.lo2 + (cj[a] + t * (cj[b] - cj[a])) * h2});
      }
      for (std::size_t k = 0; k + 1 < hits.size(); k += 2) out.push_back({hits[k], hits[k + 1]});
    }
  }
  return out;
}

std::vector<Pt> ClipLine(const CutInequality& cut, const Frame& f) {
  double p1 = cut.pi[0].get_d(), p2 = cut.pi[1].get_d(), p0 = cut.pi0.get_d();
  std::vector<Pt> pts;
  auto add = [&](double x, double y) {
    if (x < f.lo1 - 1e-9 || x > f.hi1 + 1e-9 || y < f.lo2 - 1e-9 || y > f.hi2 + 1e-9) return;
    for (const auto& q : pts) {
      if (std::abs(q.x - x) < 1e-9 && std::abs(q.y - y) < 1e-9) return;
    }
    pts.push_back({x, y});
  };
  if (p2 != 0) {
    add(f.lo1, (p0 - p1 * f.lo1) / p2);
    add(f.hi1, (p0 - p1 * f.hi1) / p2);
  }
  if (p1 != 0) {
    add((p0 - p2 * f.lo2) / p1, f.lo2);
    add((p0 - p2 * f.hi2) / p1, f.hi2);
  }
  if (pts.size() > 2) pts.resize(2);
  return pts;
}

std::string PathData(const std::vector<Segment>& segs, const Frame& f) {
  std::string d;
  for (const auto& s : segs) {
    d += "M" + Fmt(f.Px(s.a.x)) + " " + Fmt(f.Py(s.a.y)) + "L" + Fmt(f.Px(s.b.x)) + " " +
         Fmt(f.Py(s.b.y));
  }
  return d;
}

std::string SvgOpen() {
  std::string w = Fmt(kSize + 2 * kMargin);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + w +
         "\" viewBox=\"0 0 " + w + " " + w + "\">\n"
         "<!-- floating-point rendering; presentation only -->\n"
         "<rect x=\"" + Fmt(kMargin) + "\" y=\"" + Fmt(kMargin) + "\" width=\"" + Fmt(kSize) +
         "\" height=\"" + Fmt(kSize) + "\" fill=\"white\" stroke=\"#444\"/>\n";
}

}  // namespace

PlotData PlotInstance(const Instance& inst, const std::vector<CutInequality>& cuts,
                      const PlotOptions& options) {
  const Box& w = options.window;
  if (w.lo1 >= w.hi1 || w.lo2 >= w.hi2) {
    Fail(ErrorKind::kMalformedInput, "plot window " + ToString(w) + " is degenerate");
  }
  if (options.resolution < 2 || options.resolution > 2000) {
    Fail(ErrorKind::kMalformedInput, "resolution must lie in [2, 2000]");
  }
  Frame f{double(w.lo1), double(w.hi1), double(w.lo2), double(w.hi2)};
  std::ostringstream svg, csv;
  svg << SvgOpen();
  csv << "# floating-point samples; presentation only\n";
  csv << "kind,id,x1,y1,x2,y2\n";

  const auto& blocks = inst.blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Segment> all = TraceBoundary(blocks[i], f, options.resolution);
    std::vector<Segment> outer;
    for (const auto& s : all) {
      double mx = (s.a.x + s.b.x) / 2, my = (s.a.y + s.b.y) / 2;
      bool on_w = true;
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k != i && Slack(blocks[k], mx, my) < -1e-9) on_w = false;
      }
      if (on_w) outer.push_back(s);
    }
    svg << "<path d=\"" << PathData(all, f)
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    svg << "<path d=\"" << PathData(outer, f)
        << "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"2\"/>\n";
    for (const auto& s : all) {
      csv << "boundary," << i + 1 << "," << Fmt(s.a.x) << "," << Fmt(s.a.y) << ","
          << Fmt(s.b.x) << "," << Fmt(s.b.y) << "\n";
    }
  }
  if (!blocks.empty()) {
    for (const auto& z : EnumerateIntegerPoints(inst.Set(), w)) {
      double x = z[0].get_d(), y = z[1].get_d();
      svg << "<circle cx=\"" << Fmt(f.Px(x)) << "\" cy=\"" << Fmt(f.Py(y))
          << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
      csv << "point,," << ToString(z[0]) << "," << ToString(z[1]) << ",,\n";
    }
  }
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    std::vector<Pt> ends = ClipLine(cuts[c], f);
    if (ends.size() < 2) continue;
    svg << "<line x1=\"" << Fmt(f.Px(ends[0].x)) << "\" y1=\"" << Fmt(f.Py(ends[0].y))
        << "\" x2=\"" << Fmt(f.Px(ends[1].x)) << "\" y2=\"" << Fmt(f.Py(ends[1].y))
        << "\" stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<text x=\"" << Fmt(f.Px(ends[0].x) + 4) << "\" y=\"" << Fmt(f.Py(ends[0].y) - 4)
        << "\" font-size=\"12\" fill=\"#2ca02c\">" << cuts[c].ToString() << "</text>\n";
    csv << "cut,\"" << cuts[c].ToString() << "\"," << Fmt(ends[0].x) << "," << Fmt(ends[0].y)
        << "," << Fmt(ends[1].x) << "," << Fmt(ends[1].y) << "\n";
  }
  svg << "</svg>\n";
  return {svg.str(), csv.str()};
}

PlotData PlotGammaSlice(int resolution) {
  if (resolution < 2 || resolution > 2000) {
    Fail(ErrorKind::kMalformedInput, "resolution must lie in [2, 2000]");
  }
  const Rational lo(-5, 4), width(5, 2);
  const Rational h = width / resolution;
  Frame f{-1.25, 1.25, -1.25, 1.25};
  std::ostringstream svg, csv;
  svg << SvgOpen();
  csv << "gamma1,gamma2,soc_interior,gamma_1\n";
  const char* colors[4] = {nullptr, "#cfe0f5", "#e07b39", "#5b8bd0"};
  for (int j = 0; j < resolution; ++j) {
    Rational g2 = lo + (j + Rational(1, 2)) * h;
    int run_class = 0, run_start = 0;
    auto flush = [&](int end) {
      if (run_class == 0) return;
      double left = Rational(lo + run_start * h).get_d();
      double right = Rational(lo + end * h).get_d();
      double bottom = Rational(g2 - h / 2).get_d(), top = Rational(g2 + h / 2).get_d();
      svg << "<rect x=\"" << Fmt(f.Px(left)) << "\" y=\"" << Fmt(f.Py(top)) << "\" width=\""
          << Fmt(f.Px(right) - f.Px(left)) << "\" height=\"" << Fmt(f.Py(bottom) - f.Py(top))
          << "\" fill=\"" << colors[run_class] << "\"/>\n";
    };
    for (int i = 0; i <= resolution; ++i) {
      int cls = 0;
      if (i < resolution) {
        Rational g1 = lo + (i + Rational(1, 2)) * h;
        bool soc = g1 * g1 + g2 * g2 < 1;
        bool gam = abs(g1) + abs(g2) <= 1 && abs(g1) < 1;
        cls = (soc ? 1 : 0) + (gam ? 2 : 0);
        csv << ToString(g1) << "," << ToString(g2) << "," << (soc ? 1 : 0) << ","
            << (gam ? 1 : 0) << "\n";
      }
      if (cls != run_class || i == resolution) {
        flush(i);
        run_class = cls;
        run_start = i;
      }
    }
  }
  double cx = f.Px(0), cy = f.Py(0), r = f.Px(1) - f.Px(0);
  svg << "<circle cx=\"" << Fmt(cx) << "\" cy=\"" << Fmt(cy) << "\" r=\"" << Fmt(r)
      << "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"1.5\"/>\n";
  svg << "<path d=\"M" << Fmt(f.Px(1)) << " " << Fmt(cy) << "L" << Fmt(cx) << " "
      << Fmt(f.Py(1)) << "L" << Fmt(f.Px(-1)) << " " << Fmt(cy) << "L" << Fmt(cx) << " "
      << Fmt(f.Py(-1)) << "Z\" fill=\"none\" stroke=\"#a0440f\" stroke-width=\"1.5\"/>\n";
  for (double x : {-1.0, 1.0}) {
    svg << "<circle cx=\"" << Fmt(f.Px(x)) << "\" cy=\"" << Fmt(cy)
        << "\" r=\"4\" fill=\"white\" stroke=\"#a0440f\"/>\n";
  }
  svg << "<text x=\"" << Fmt(f.Px(1.05)) << "\" y=\"" << Fmt(cy - 6)
      << "\" font-size=\"12\">gamma1</text>\n";
  svg << "<text x=\"" << Fmt(cx + 6) << "\" y=\"" << Fmt(f.Py(1.15))
      << "\" font-size=\"12\">gamma2</text>\n";
  svg << "</svg>\n";
  return {svg.str(), csv.str()};
}

}  // namespace soccuts
