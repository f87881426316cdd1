"""Run every identity suite on its default type through the CLI entry point."""

from hecke_sheaves.cli import main

for args in (["suite", "--suite", "all"],
             ["suite", "--suite", "lambda", "--type", "G2"],
             ["pgl2", "product", "--a", "eps:1", "--b", "eps:5"]):
    print("$ hecke-sheaves " + " ".join(args))
    code = main(args)
    print("exit code", code)
