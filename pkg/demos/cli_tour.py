"""Drive every CLI mode in-process and show the emitted files.

Useful as a copy-paste source for shell invocations; each block prints
the equivalent command line first.  Everything lands in ./cli_out/.
"""

import pathlib
import sys

from fracwell import cli

OUT = pathlib.Path("cli_out")


def run(*args):
    print(f"$ fracwell {' '.join(args)}")
    code = cli.main(list(args))
    print(f"  -> exit {code}")
    return code


def main():
    OUT.mkdir(exist_ok=True)

    run("--mode", "energy", "--alpha", "1.5", "--lambda", "0.8",
        "--format", "json", "--output", str(OUT / "energy.json"))

    run("--mode", "wavefunction", "--alpha", "1.5", "--lambda", "0.8",
        "--x-min", "0", "--x-max", "6", "--x-steps", "25",
        "--format", "csv", "--output", str(OUT / "wavefunction.csv"))

    run("--mode", "sweep", "--sweep-alpha", "1.2,1.5,1.8,2.0",
        "--sweep-lambda", "0.3,0.5,0.8,1.0",
        "--format", "csv", "--output", str(OUT / "sweep.csv"))

    run("--mode", "validate", "--format", "csv",
        "--output", str(OUT / "validate.csv"))

    run("--mode", "hfox-eval", "--hfox", "1,0,0,1;;0:1",
        "--z", "0.5,1.0,2.0", "--format", "csv",
        "--output", str(OUT / "hfox.csv"))

    # a config file carrying the same energy run; flags still win
    cfg = OUT / "run.cfg"
    cfg.write_text("mode = energy\nalpha = 1.5\nlambda = 0.8\n"
                   "gamma = 1.0\nformat = json\n")
    run("--config", str(cfg), "--output", str(OUT / "energy_from_cfg.json"))

    print("\nemitted files:")
    for p in sorted(OUT.iterdir()):
        print(f"  {p}  ({p.stat().st_size} bytes)")


if __name__ == "__main__":
    sys.exit(main())
