// plot --sextic c0,...,c6 --curve conic|sextic|both --out file.svg

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hv/plot.hpp"
#include "hv/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Render the null conic and the trope sextic"};
    std::string sextic, curve = "both", out, mode = "apolar";
    bool calculus = false;
    app.add_option("--sextic", sextic, "c0,c1,...,c6");
    app.add_option("--curve", curve, "conic, sextic or both")->check(CLI::IsMember({"conic", "sextic", "both"}));
    app.add_option("--mode", mode, "literal or apolar pairing")->check(CLI::IsMember({"literal", "apolar"}));
    app.add_flag("--calculus-constants", calculus, "use the constants matching the d-bar calculus");
    app.add_option("--out", out, "SVG path")->required();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    hv::PlotSpec spec;
    spec.curve = curve == "conic" ? hv::PlotCurve::conic : curve == "sextic" ? hv::PlotCurve::sextic : hv::PlotCurve::both;
    spec.mode = mode == "literal" ? hv::PairingMode::literal : hv::PairingMode::apolar;
    if (calculus) spec.constants = hv::calculus_sextic_constants();
    try {
        if (spec.curve != hv::PlotCurve::conic) {
            if (sextic.empty()) throw hv::DomainError("--sextic is required for this curve");
            spec.sextic = hv::parse_coefficients(sextic);
            for (const auto& c : spec.sextic.coefficients())
                if (!c.is_real()) throw hv::DomainError("the plot needs real coefficients");
        }
    } catch (const std::exception& e) {
        std::cerr << "plot: " << e.what() << "\n";
        return 2;
    }

    std::ofstream f(out, std::ios::binary);
    if (!(f << hv::render_svg(spec))) {
        std::cerr << "plot: cannot write " << out << "\n";
        return 3;
    }
    return 0;
}
