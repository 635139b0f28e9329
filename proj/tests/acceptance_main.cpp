#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "acceptance.hpp"

/* gate runner: one line per criterion on stdout, progress on stderr,
 * exit 0 only when every criterion passes */
int main(int argc, char **argv) {
    diodef::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << a << " needs a value\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (a == "--seed") {
            opt.seed = std::strtoull(next().c_str(), nullptr, 10);
        } else if (a == "--jobs") {
            opt.jobs = std::atoi(next().c_str());
        } else if (a == "--only") {
            std::stringstream ss(next());
            std::string tok;
            while (std::getline(ss, tok, ',')) opt.only.push_back(std::atoi(tok.c_str()));
        } else {
            std::cerr << "usage: acceptance [--seed N] [--jobs N] [--only 1,2,...]\n";
            return 2;
        }
    }
    opt.progress = [](const std::string &m) { std::cerr << m << std::endl; };
    auto results = diodef::run_acceptance(opt);
    bool all = !results.empty();
    for (const auto &r : results) {
        std::cout << diodef::acceptance_line(r) << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
