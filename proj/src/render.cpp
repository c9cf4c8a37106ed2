#include "padic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace padic {

namespace {

struct Interval {
    double left;
    double width;
    cplx value;
    bool structural_zero;
    std::string label;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string value_label(const cplx& v, bool structural_zero) {
    if (structural_zero) return "0";
    double re = v.real(), im = v.imag();
    if (std::abs(im) < 1e-12 && std::abs(re - std::round(re)) < 1e-12)
        return fmt(std::round(re));
    return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

/// One interval per tree node at level -N, over G_{M+1}^bot.
std::vector<Interval> node_intervals(const FrameSystem& fs, const std::vector<cplx>& values,
                                     const std::vector<char>& zeros) {
    const GroupParams& params = fs.params;
    double width = std::pow((double)params.p, -params.N);
    std::vector<Interval> out;
    for (long m = 0; m < (long)values.size(); ++m) {
        auto c = node_coset(params, m);
        double left = monna_dual(params.p, c.rep).approx(params.p);
        out.push_back({left, width, values[m], zeros[m] != 0, value_label(values[m], zeros[m])});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
        return a.left < b.left;
    });
    return out;
}

std::vector<Interval> wavelet_intervals(const FrameSystem& fs) {
    std::vector<Interval> out;
    for (size_t i = 0; i < fs.wavelets.size(); ++i) {
        auto& w = fs.wavelets[i];
        double left = monna_dual(fs.params.p, w.support.rep).approx(fs.params.p);
        double width = std::pow((double)fs.params.p, w.support.level);
        out.push_back({left, width, cplx(1.0), false,
                       "psi_hat(" + std::to_string(i + 1) + ")=1, t=" + std::to_string(w.t)});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
        return a.left < b.left;
    });
    return out;
}

std::vector<Interval> intervals_for(const FrameSystem& fs, RenderWhat what) {
    switch (what) {
        case RenderWhat::PhiHat:
            return node_intervals(fs, fs.phi_hat_node, fs.phi_hat_zero);
        case RenderWhat::PhiHatShifted:
            return node_intervals(fs, fs.shifted_node, fs.shifted_zero);
        case RenderWhat::Wavelets:
            return wavelet_intervals(fs);
    }
    return {};
}

std::string ascii_render(const FrameSystem& fs, const std::vector<Interval>& iv) {
    std::ostringstream os;
    for (auto& i : iv)
        os << "[" << fmt(i.left) << ", " << fmt(i.left + i.width) << ")  " << i.label << "\n";
    for (int k = -fs.params.N; k <= fs.params.M + 1; ++k)
        os << "G_(" << k << ")^bot = [0, " << fmt(std::pow((double)fs.params.p, k)) << "]\n";
    return os.str();
}

std::string svg_render(const FrameSystem& fs, const std::vector<Interval>& iv) {
    const GroupParams& params = fs.params;
    double span = std::pow((double)params.p, params.M + 1);
    const double W = 900.0, H = 180.0, x0 = 30.0, x1 = W - 30.0;
    auto X = [&](double monna) { return x0 + (x1 - x0) * monna / span; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
       << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"120\" x2=\"" << fmt(x1)
       << "\" y2=\"120\" stroke=\"black\"/>\n";
    for (auto& i : iv) {
        double y = i.structural_zero ? 110.0 : 90.0;
        os << "<line x1=\"" << fmt(X(i.left)) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(X(i.left + i.width)) << "\" y2=\"" << fmt(y)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << fmt(X(i.left + 0.5 * i.width)) << "\" y=\"" << fmt(y - 6.0)
           << "\" font-size=\"10\" text-anchor=\"middle\">" << i.label << "</text>\n";
    }
    // annulus brackets for the subgroups G_k^bot
    for (int k = -params.N; k <= params.M + 1; ++k) {
        double r = std::pow((double)params.p, k);
        double y = 130.0 + 10.0 * (k + params.N);
        os << "<path d=\"M " << fmt(X(0)) << " " << fmt(y) << " Q " << fmt(X(r / 2.0)) << " "
           << fmt(y + 8.0) << " " << fmt(X(r)) << " " << fmt(y)
           << "\" fill=\"none\" stroke=\"gray\"/>\n";
        os << "<text x=\"" << fmt(X(r)) << "\" y=\"" << fmt(y + 4.0)
           << "\" font-size=\"9\" fill=\"gray\">G_(" << k << ")^bot</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const FrameSystem& fs, RenderWhat what, RenderFormat format) {
    auto iv = intervals_for(fs, what);
    return format == RenderFormat::Ascii ? ascii_render(fs, iv) : svg_render(fs, iv);
}

}  // namespace padic
