from krstrata.cli import run

run()
