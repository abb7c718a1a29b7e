"""Drive the command-line interface end to end, in process.

Everything the library does is reachable from the `subexp` entry point;
this script calls main() directly so the output lands in one transcript.
"""

import subexp.cli as cli

for argv in (
    ["spectrum", "--model", "standard"],
    ["predict", "--model", "roots", "--n", "1000"],
    ["predict", "--model", "congruent", "--a", "2", "--b", "1",
     "--n", "500", "--formula", "khintchine", "--log10"],
    ["exact", "--model", "standard", "--N", "30", "--oracle"],
    ["compare", "--model", "standard", "--grid", "100:400:100"],
    ["verify"],
):
    print(f"$ subexp {' '.join(argv)}")
    code = cli.main(argv)
    print(f"(exit {code})")
    print()
