#include "sandpile/render.hpp"

#include <sstream>

namespace sandpile {

namespace {

// ordinate of the east step at each abscissa 0..m-1 of a monotone path word
std::vector<int> east_step_heights(const BinomialWord& w) {
    std::vector<int> heights;
    int y = 0;
    for (char ch : w.letters) {
        if (ch == 'E') {
            heights.push_back(y);
        } else {
            ++y;
        }
    }
    return heights;
}

}  // namespace

std::string render_polyomino_ascii(const Polyomino& p) {
    const std::vector<int> top = east_step_heights(p.upper);
    const std::vector<int> bottom = east_step_heights(p.lower);
    std::ostringstream out;
    out << '+' << std::string(p.m, '-') << "+\n";
    for (int y = p.n - 1; y >= 0; --y) {
        out << '|';
        for (int x = 0; x < p.m; ++x) {
            out << (bottom[x] <= y && y < top[x] ? '#' : ' ');
        }
        out << "|\n";
    }
    out << '+' << std::string(p.m, '-') << "+\n";
    return out.str();
}

std::string render_polyomino_svg(const Polyomino& p) {
    constexpr int unit = 20;
    const std::vector<int> top = east_step_heights(p.upper);
    const std::vector<int> bottom = east_step_heights(p.lower);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (p.m + 2) * unit
        << "\" height=\"" << (p.n + 2) * unit << "\" viewBox=\"0 0 " << (p.m + 2) * unit << " "
        << (p.n + 2) * unit << "\">\n";
    auto px = [&](int x) { return (x + 1) * unit; };
    auto py = [&](int y) { return (p.n + 1 - y) * unit; };
    for (int x = 0; x < p.m; ++x) {
        for (int y = bottom[x]; y < top[x]; ++y) {
            out << "  <rect x=\"" << px(x) << "\" y=\"" << py(y + 1) << "\" width=\"" << unit
                << "\" height=\"" << unit << "\" fill=\"#e8c46a\" stroke=\"#999999\"/>\n";
        }
    }
    auto polyline = [&](const BinomialWord& w, const char* colour) {
        out << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"3\" points=\"";
        int x = 0, y = 0;
        out << px(x) << "," << py(y);
        for (char ch : w.letters) {
            (ch == 'E' ? x : y) += 1;
            out << " " << px(x) << "," << py(y);
        }
        out << "\"/>\n";
    };
    polyline(p.upper, "#cc2222");
    polyline(p.lower, "#22aa44");
    out << "</svg>\n";
    return out.str();
}

std::string render_framed_pair_ascii(const FramedPair& p) {
    const long long ax = p.anchor().x, ay = p.anchor().y;
    const int m = p.m(), n = p.n();
    const long long x0 = ax - m, x1 = ax + m;
    const long long y0 = ay - n, y1 = ay + n;
    // character canvas twice the lattice resolution: even/even cells are
    // lattice points, odd offsets are edges
    const int width = static_cast<int>(2 * (x1 - x0) + 1);
    const int height = static_cast<int>(2 * (y1 - y0) + 1);
    std::vector<std::string> canvas(height, std::string(width, ' '));
    auto put = [&](long long x2, long long y2, char ch) {
        // x2, y2 in doubled coordinates
        if (x2 < 2 * x0 || x2 > 2 * x1 || y2 < 2 * y0 || y2 > 2 * y1) return;
        int col = static_cast<int>(x2 - 2 * x0);
        int row = static_cast<int>(2 * y1 - y2);
        if (canvas[row][col] == ' ') canvas[row][col] = ch;
    };

    // red path: north steps labelled by ordinate, east steps by abscissa
    for (long long i = y0 - 1; i <= y1; ++i) put(2 * p.red_north_x(i), 2 * i + 1, '|');
    for (long long j = x0 - 1; j <= x1; ++j) put(2 * j + 1, 2 * p.red_east_y(j), '_');
    // green path
    for (long long i = y0 - 1; i <= y1; ++i) put(2 * p.green_north_x(i), 2 * i + 1, ':');
    for (long long j = x0 - 1; j <= x1; ++j) put(2 * j + 1, 2 * p.green_east_y(j), '.');

    put(2 * ax, 2 * ay, 'o');

    std::ostringstream out;
    for (const std::string& line : canvas) out << line << "\n";
    return out.str();
}

}  // namespace sandpile
