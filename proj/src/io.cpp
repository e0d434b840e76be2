#include "floorlab/io.hpp"

#include <algorithm>
#include <sstream>

namespace floorlab::io {

namespace {

// round(t * scale) computed exactly, for mapping rationals onto pixel space.
long scale_round(const Rational& t, long scale) {
    const Rational scaled = t * Rational(scale) + Rational(1, 2);
    return scaled.floor().convert_to<long>();
}

} // namespace

json to_json(const SidedLimits& limits) {
    json j;
    j["left"] = limits.left.str();
    j["right"] = limits.right.str();
    j["is_jump"] = limits.is_jump;
    j["jump"] = limits.jump.str();
    return j;
}

json to_json(const Discontinuity& discontinuity) {
    json j;
    j["at"] = discontinuity.at.str();
    j["left"] = discontinuity.left.str();
    j["right"] = discontinuity.right.str();
    j["jump"] = discontinuity.jump.str();
    return j;
}

json to_json(const std::vector<Discontinuity>& discontinuities) {
    json arr = json::array();
    for (const Discontinuity& d : discontinuities)
        arr.push_back(to_json(d));
    return arr;
}

json to_json(const StepInterval& interval) {
    json j;
    j["lo"] = interval.lo.str();
    j["hi"] = interval.hi.str();
    j["value"] = interval.value.str();
    return j;
}

json to_json(const Partition& partition) {
    json j;
    j["n"] = partition.n;
    j["a"] = partition.a.str();
    j["b"] = partition.b.str();
    json arr = json::array();
    for (const StepInterval& iv : partition.intervals)
        arr.push_back(to_json(iv));
    j["intervals"] = std::move(arr);
    return j;
}

json to_json(const Counterexample& cex) {
    json j;
    j["inputs"] = cex.inputs;
    j["expected"] = cex.expected;
    j["actual"] = cex.actual;
    return j;
}

json to_json(const ClaimResult& result) {
    json j;
    j["claim"] = std::string(to_string(result.claim));
    j["range"] = result.range;
    j["status"] = std::string(to_string(result.status));
    json arr = json::array();
    for (const Counterexample& c : result.counterexamples)
        arr.push_back(to_json(c));
    j["counterexamples"] = std::move(arr);
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    json arr = json::array();
    for (const ClaimResult& r : report.claims)
        arr.push_back(to_json(r));
    j["claims"] = std::move(arr);
    j["totals"] = {{"pass", report.passed},
                   {"fail", report.failed},
                   {"mismatch", report.mismatched}};
    j["complete"] = report.complete;
    return j;
}

json envelope(std::string_view command, json parameters, json results,
              std::string_view format) {
    json j;
    j["command"] = std::string(command);
    j["format"] = std::string(format);
    j["parameters"] = std::move(parameters);
    j["results"] = std::move(results);
    return j;
}

std::string dump(const json& payload) { return payload.dump(2) + "\n"; }

std::string csv(const std::vector<Discontinuity>& discontinuities) {
    std::string out = "at,left,right,jump\n";
    for (const Discontinuity& d : discontinuities) {
        out += d.at.str();
        out += ',';
        out += d.left.str();
        out += ',';
        out += d.right.str();
        out += ',';
        out += d.jump.str();
        out += '\n';
    }
    return out;
}

std::string csv(const Partition& partition) {
    std::string out = "lo,hi,value\n";
    for (const StepInterval& iv : partition.intervals) {
        out += iv.lo.str();
        out += ',';
        out += iv.hi.str();
        out += ',';
        out += iv.value.str();
        out += '\n';
    }
    return out;
}

std::string render_svg(const Partition& partition) {
    constexpr long canvas_w = 800, canvas_h = 600;
    constexpr long plot_x0 = 70, plot_x1 = 780;
    constexpr long plot_y0 = 30, plot_y1 = 540;
    constexpr long plot_w = plot_x1 - plot_x0;
    constexpr long plot_h = plot_y1 - plot_y0;

    const Rational& a = partition.a;
    const Rational& b = partition.b;
    const Rational width = b - a;

    // One unit of headroom above and below keeps markers inside the frame.
    const BigInt value_lo = partition.intervals.front().value - 1;
    const BigInt value_hi = partition.intervals.back().value + 1;
    const Rational span = Rational(value_hi - value_lo);

    const auto px = [&](const Rational& x) {
        return plot_x0 + scale_round((x - a) / width, plot_w);
    };
    const auto py = [&](const BigInt& v) {
        return plot_y1 - scale_round(Rational(v - value_lo) / span, plot_h);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w
        << "\" height=\"" << canvas_h << "\" viewBox=\"0 0 " << canvas_w << " "
        << canvas_h << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << canvas_w << "\" height=\""
        << canvas_h << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << canvas_w / 2
        << "\" y=\"20\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"14\">f_"
        << partition.n << " on [" << a.str() << ", " << b.str() << ")</text>\n";

    // Axes.
    svg << "  <line x1=\"" << plot_x0 << "\" y1=\"" << plot_y1 << "\" x2=\""
        << plot_x1 << "\" y2=\"" << plot_y1 << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << plot_x0 << "\" y1=\"" << plot_y0 << "\" x2=\""
        << plot_x0 << "\" y2=\"" << plot_y1 << "\" stroke=\"black\"/>\n";

    // x ticks at the breakpoints; if they crowd, label integers only.
    std::vector<Rational> boundaries;
    boundaries.reserve(partition.intervals.size() + 1);
    for (const StepInterval& iv : partition.intervals)
        boundaries.push_back(iv.lo);
    boundaries.push_back(b);
    const bool label_all = boundaries.size() <= 17;
    for (const Rational& x : boundaries) {
        if (!label_all && !x.is_integer())
            continue;
        const long cx = px(x);
        svg << "  <line x1=\"" << cx << "\" y1=\"" << plot_y1 << "\" x2=\"" << cx
            << "\" y2=\"" << plot_y1 + 6 << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << cx << "\" y=\"" << plot_y1 + 22
            << "\" text-anchor=\"middle\" font-family=\"monospace\" "
               "font-size=\"11\">"
            << x.str() << "</text>\n";
    }

    // y ticks at the step values, thinned to at most 16.
    const std::size_t count = partition.intervals.size();
    const std::size_t stride = count <= 16 ? 1 : (count + 15) / 16;
    for (std::size_t i = 0; i < count; i += stride) {
        const BigInt& v = partition.intervals[i].value;
        const long cy = py(v);
        svg << "  <line x1=\"" << plot_x0 - 6 << "\" y1=\"" << cy << "\" x2=\""
            << plot_x0 << "\" y2=\"" << cy << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << plot_x0 - 10 << "\" y=\"" << cy + 4
            << "\" text-anchor=\"end\" font-family=\"monospace\" "
               "font-size=\"11\">"
            << v.str() << "</text>\n";
    }

    // Steps: closed left endpoint, open right endpoint.
    for (const StepInterval& iv : partition.intervals) {
        const long x1 = px(iv.lo), x2 = px(iv.hi), cy = py(iv.value);
        svg << "  <line class=\"step\" x1=\"" << x1 << "\" y1=\"" << cy
            << "\" x2=\"" << x2 << "\" y2=\"" << cy
            << "\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";
        svg << "  <circle cx=\"" << x1 << "\" cy=\"" << cy
            << "\" r=\"3\" fill=\"#1f6feb\"/>\n";
        svg << "  <circle cx=\"" << x2 << "\" cy=\"" << cy
            << "\" r=\"3\" fill=\"white\" stroke=\"#1f6feb\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace floorlab::io
