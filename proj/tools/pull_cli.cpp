#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pull/catalog.hpp"
#include "pull/compiler.hpp"
#include "pull/lts.hpp"
#include "pull/solver.hpp"

namespace fs = std::filesystem;
using namespace pull;

namespace {

constexpr int kOk = 0;        // success / PASS / SOLVABLE as expected
constexpr int kFail = 1;      // verification FAIL or UNSOLVABLE
constexpr int kUnknown = 2;   // limits hit
constexpr int kBadInput = 3;  // input/format error

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

SolveLimits limits_from(uint64_t maxStates, double maxSeconds) {
    SolveLimits l;
    l.max_states = maxStates;
    l.max_seconds = maxSeconds;
    return l;
}

int cmd_solve(const std::string& boardPath, uint64_t maxStates, double maxSeconds,
              const std::string& witnessPath) {
    Board board = parse_board(slurp(boardPath));
    SolveOutcome out = solve(board, limits_from(maxStates, maxSeconds));
    std::cout << "verdict " << verdict_name(out.verdict) << "\n";
    std::cout << "states_explored " << out.states_explored << "\n";
    std::cout << "frontier_peak " << out.frontier_peak << "\n";
    if (board.variant == Variant::PullOne)
        std::cout << "potential_violations " << out.potential_violations << "\n";
    switch (out.verdict) {
        case Verdict::Solvable: {
            std::cout << "pulls " << out.witness.size() << "\n";
            if (!witnessPath.empty()) spit(witnessPath, render_witness(out.witness));
            return kOk;
        }
        case Verdict::Unsolvable: return kFail;
        case Verdict::Unknown: return kUnknown;
    }
    return kUnknown;
}

int cmd_verify_board(const std::string& boardPath, const std::string& witnessPath) {
    Board board = parse_board(slurp(boardPath));
    std::vector<Move> witness = parse_witness(slurp(witnessPath));
    ReplayResult r = replay(board, witness);
    if (!r.ok) {
        std::cout << "FAIL illegal move at index " << r.failed_index << ": " << r.error << "\n";
        return kFail;
    }
    if (!r.goal_reached) {
        std::cout << "FAIL witness replays but the goal is not reached\n";
        return kFail;
    }
    std::cout << "OK witness replays to goal (" << witness.size() << " pulls)\n";
    return kOk;
}

int verify_one_gadget(const GadgetTemplate& tmpl, const PortContract& contract, int stubLen,
                      const LtsLimits& limits, bool printDetail) {
    bool allPass = true;
    ScriptReport sr = script_replay(tmpl, &contract, stubLen);
    std::cout << "  scripts: " << (sr.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& issue : sr.issues)
        std::cout << "    script " << (issue.script_index + 1) << ": " << issue.message << "\n";
    allPass &= sr.pass;
    for (Orientation o : tmpl.allowed_orientations) {
        GadgetTemplate t = transform(tmpl, o);
        PortLts lts = build_port_lts(t, stubLen, limits);
        CheckReport report = check_contract(lts, contract);
        std::cout << "  " << orientation_name(o) << ": "
                  << (report.pass ? "PASS" : "FAIL") << " (states " << lts.num_states
                  << ", configs " << lts.raw_configs << ", search " << lts.exact_states_explored
                  << ")\n";
        if (!report.pass || printDetail) {
            for (const auto& issue : report.issues) {
                std::cout << "    " << issue.message << "\n";
                if (!issue.trace.empty()) {
                    std::cout << "      trace:";
                    for (const auto& e : issue.trace) std::cout << " " << e.in << "->" << e.out;
                    std::cout << "\n";
                }
            }
        }
        allPass &= report.pass;
    }
    return allPass ? kOk : kFail;
}

int cmd_verify_gadget(const std::string& gadgetPath, const std::string& contractPath, int stubLen,
                      uint64_t maxStates, double maxSeconds) {
    GadgetTemplate tmpl = load_gadget(slurp(gadgetPath));
    PortContract contract = parse_contract(slurp(contractPath));
    LtsLimits limits{maxStates, maxSeconds};
    // Port-name mismatch is an input error, not a verification failure.
    for (const std::string& name : contract.port_names()) {
        if (tmpl.port_index(name) < 0) {
            std::cerr << "error: contract references port '" << name
                      << "' that the gadget does not have\n";
            return kBadInput;
        }
    }
    std::cout << tmpl.name << " vs " << contract.name << ":\n";
    int rc = verify_one_gadget(tmpl, contract, stubLen, limits, false);
    std::cout << (rc == kOk ? "PASS" : "FAIL") << "\n";
    return rc;
}

int cmd_catalog_check(const std::string& dir, int stubLen, uint64_t maxStates, double maxSeconds) {
    if (!fs::is_directory(dir)) {
        std::cerr << "error: not a directory: " << dir << "\n";
        return kBadInput;
    }
    std::vector<fs::path> gadgetFiles;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".gadget") gadgetFiles.push_back(entry.path());
    }
    std::sort(gadgetFiles.begin(), gadgetFiles.end());
    if (gadgetFiles.empty()) {
        std::cerr << "error: no .gadget files in " << dir << "\n";
        return kBadInput;
    }
    LtsLimits limits{maxStates, maxSeconds};
    int failures = 0;
    for (const fs::path& path : gadgetFiles) {
        GadgetTemplate tmpl;
        PortContract contract;
        try {
            tmpl = load_gadget(slurp(path.string()));
            fs::path contractPath = path.parent_path() / (tmpl.contract_name + ".contract");
            contract = parse_contract(slurp(contractPath.string()));
        } catch (const ParseError& e) {
            std::cerr << "error loading " << path.filename().string() << ": " << e.what() << "\n";
            return kBadInput;
        }
        std::cout << path.filename().string() << " [" << variant_name(tmpl.variant) << "] vs "
                  << contract.name << ":\n";
        int rc;
        try {
            rc = verify_one_gadget(tmpl, contract, stubLen, limits, false);
        } catch (const LtsLimitError& e) {
            std::cout << "  UNKNOWN: " << e.what() << " (explored " << e.explored << ")\n";
            return kUnknown;
        }
        if (rc != kOk) ++failures;
    }
    if (failures) {
        std::cout << "FAIL (" << failures << " of " << gadgetFiles.size() << " gadgets)\n";
        return kFail;
    }
    std::cout << "PASS (" << gadgetFiles.size() << " gadgets)\n";
    return kOk;
}

int cmd_lts(const std::string& gadgetPath, int stubLen) {
    GadgetTemplate tmpl = load_gadget(slurp(gadgetPath));
    PortLts lts = build_port_lts(tmpl, stubLen);
    std::cout << "states " << lts.num_states << " (raw configs " << lts.raw_configs << ")\n";
    for (const auto& tr : lts.transitions) {
        std::cout << "  s" << tr.from << " --" << lts.port_names[static_cast<size_t>(tr.in)]
                  << "->" << lts.port_names[static_cast<size_t>(tr.out)] << "--> s" << tr.to
                  << "\n";
    }
    for (int s = 0; s < lts.num_states; ++s) {
        std::cout << "s" << s << " boxes:";
        for (const Box& b : lts.representatives[static_cast<size_t>(s)]) {
            if (b.pos.row == -1000) {
                std::cout << " (none)";
            } else {
                std::cout << " (" << b.pos.row << "," << b.pos.col << ")";
            }
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_play(const std::string& boardPath, const std::string& scriptPath) {
    Board board = parse_board(slurp(boardPath));
    std::ifstream scriptFile;
    std::istream* in = &std::cin;
    if (!scriptPath.empty()) {
        scriptFile.open(scriptPath);
        if (!scriptFile) {
            std::cerr << "error: cannot read script " << scriptPath << "\n";
            return kBadInput;
        }
        in = &scriptFile;
    }

    struct Snapshot {
        std::vector<Box> boxes;
        Pos player;
    };
    std::vector<Snapshot> undoStack;
    std::vector<Box> boxes = board.boxes;
    Pos player = board.player_start;
    bool goalReached = player == board.goal;

    auto boxAt = [&](Pos p) -> Box* {
        for (Box& b : boxes)
            if (b.pos == p) return &b;
        return nullptr;
    };
    auto render = [&]() {
        for (int r = 0; r < board.grid.height(); ++r) {
            for (int c = 0; c < board.grid.width(); ++c) {
                Pos p{r, c};
                char ch = board.grid.is_floor(p) ? '.' : '#';
                if (board.grid.is_floor(p)) {
                    if (Box* b = boxAt(p)) {
                        auto bc = b->handles.box_char();
                        ch = bc ? *bc : '?';
                    } else if (p == player) {
                        ch = 'P';
                    } else if (p == board.goal) {
                        ch = 'G';
                    }
                }
                std::cout << ch;
            }
            std::cout << "\n";
        }
        if (player == board.goal) std::cout << "** goal reached **\n";
    };

    render();
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == ';') continue;
        std::istringstream ls(line);
        std::string cmd;
        ls >> cmd;
        if (cmd == "q" || cmd == "quit") break;
        if (cmd == "undo" || cmd == "u" /*alias*/) {
            if (cmd == "u") {
                // 'u' is a walk command; fall through below.
            } else {
                if (undoStack.empty()) {
                    std::cout << "nothing to undo\n";
                } else {
                    boxes = undoStack.back().boxes;
                    player = undoStack.back().player;
                    undoStack.pop_back();
                    render();
                }
                continue;
            }
        }
        auto tryWalk = [&](Dir d) {
            Pos q = player + d;
            if (!board.grid.is_floor(q) || boxAt(q)) {
                std::cout << "blocked\n";
                return;
            }
            undoStack.push_back({boxes, player});
            player = q;
            goalReached |= player == board.goal;
            render();
        };
        if (cmd == "l") {
            tryWalk(Dir::L);
        } else if (cmd == "r") {
            tryWalk(Dir::R);
        } else if (cmd == "u") {
            tryWalk(Dir::U);
        } else if (cmd == "d") {
            tryWalk(Dir::D);
        } else if (cmd == "p") {
            std::string ds;
            ls >> ds;
            auto d = ds.size() == 1 ? dir_from_char(ds[0]) : std::nullopt;
            if (!d) {
                std::cout << "usage: p <L|R|U|D>\n";
                continue;
            }
            // Pull direction d: the box behind the player follows as the
            // player steps to the cell ahead.
            Pos boxPos = player + opposite(*d);
            Pos dest = player + *d;
            Box* b = boxAt(boxPos);
            if (!b || !b->handles.contains(*d) || !board.grid.is_floor(dest) || boxAt(dest)) {
                std::cout << "illegal pull\n";
                continue;
            }
            undoStack.push_back({boxes, player});
            b->pos = player;
            player = dest;
            goalReached |= player == board.goal;
            render();
        } else {
            std::cout << "commands: l r u d  |  p <L|R|U|D>  |  undo  |  quit\n";
        }
    }
    return goalReached ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pull puzzle toolkit: engine, solver, gadget verifier, and SAT compiler"};
    app.require_subcommand(1);

    // ---- compile
    auto* compile = app.add_subcommand("compile", "Compile a DIMACS CNF into a board");
    std::string cnfPath, variantFlag = "PULL", outBase = "out";
    compile->add_option("cnf", cnfPath, "DIMACS CNF file")->required();
    compile->add_option("--variant", variantFlag, "PULL, PULL_OPP or PULL_ONE");
    compile->add_option("--out", outBase, "output path base (writes .board/.prov/.stats)");

    // ---- solve
    auto* solveCmd = app.add_subcommand("solve", "Decide goal reachability of a board");
    std::string boardPath, witnessOut;
    uint64_t maxStates = 100'000'000;
    double maxSeconds = 1800.0;
    solveCmd->add_option("board", boardPath, "board file")->required();
    solveCmd->add_option("--max-states", maxStates, "state budget");
    solveCmd->add_option("--max-seconds", maxSeconds, "time budget");
    solveCmd->add_option("--witness", witnessOut, "write witness here when solvable");

    // ---- verify-board
    auto* verifyBoard = app.add_subcommand("verify-board", "Replay a witness against a board");
    std::string vbBoard, vbWitness;
    verifyBoard->add_option("board", vbBoard, "board file")->required();
    verifyBoard->add_option("witness", vbWitness, "witness file")->required();

    // ---- verify-gadget
    auto* verifyGadget = app.add_subcommand("verify-gadget", "Check a gadget tile against a contract");
    std::string vgGadget, vgContract;
    int stubLen = 3;
    uint64_t vgMaxStates = 10'000'000;
    double vgMaxSeconds = 60.0;
    verifyGadget->add_option("gadget", vgGadget, "gadget file")->required();
    verifyGadget->add_option("contract", vgContract, "contract file")->required();
    verifyGadget->add_option("--stub-len", stubLen, "stub corridor length (>= 3)");
    verifyGadget->add_option("--max-states", vgMaxStates, "search budget");
    verifyGadget->add_option("--max-seconds", vgMaxSeconds, "time budget");

    // ---- catalog-check
    auto* catalogCheck = app.add_subcommand("catalog-check", "Verify every gadget in a directory");
    std::string catalogDir;
    int ccStubLen = 3;
    uint64_t ccMaxStates = 10'000'000;
    double ccMaxSeconds = 60.0;
    catalogCheck->add_option("dir", catalogDir, "catalog directory")->required();
    catalogCheck->add_option("--stub-len", ccStubLen, "stub corridor length (>= 3)");
    catalogCheck->add_option("--max-states", ccMaxStates, "per-gadget search budget");
    catalogCheck->add_option("--max-seconds", ccMaxSeconds, "per-gadget time budget");

    // ---- catalog-init
    auto* catalogInit = app.add_subcommand("catalog-init", "Write the built-in catalog to a directory");
    std::string initDir = "catalog";
    catalogInit->add_option("--out", initDir, "target directory");

    // ---- play
    auto* play = app.add_subcommand("play", "Interactive ASCII stepper");
    std::string playBoard, playScript;
    play->add_option("board", playBoard, "board file")->required();
    play->add_option("--script", playScript, "read commands from this file");

    // ---- lts (debugging aid)
    auto* ltsCmd = app.add_subcommand("lts", "Dump the port transition system of a gadget");
    std::string ltsGadget;
    int ltsStubLen = 3;
    ltsCmd->add_option("gadget", ltsGadget, "gadget file")->required();
    ltsCmd->add_option("--stub-len", ltsStubLen, "stub corridor length (>= 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compile) return run_compile_command(cnfPath, variantFlag, outBase);
        if (*solveCmd) return cmd_solve(boardPath, maxStates, maxSeconds, witnessOut);
        if (*verifyBoard) return cmd_verify_board(vbBoard, vbWitness);
        if (*verifyGadget)
            return cmd_verify_gadget(vgGadget, vgContract, stubLen, vgMaxStates, vgMaxSeconds);
        if (*catalogCheck) return cmd_catalog_check(catalogDir, ccStubLen, ccMaxStates, ccMaxSeconds);
        if (*catalogInit) {
            write_catalog(initDir);
            std::cout << "wrote catalog to " << initDir << "\n";
            return kOk;
        }
        if (*play) return cmd_play(playBoard, playScript);
        if (*ltsCmd) return cmd_lts(ltsGadget, ltsStubLen);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const LtsLimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
