"""Scanning a range of primes for one window, in parallel.

The same scan is available as `splitter-sets search`; output order is
ascending q whatever the number of workers.

Run: python demos/07_prime_search.py
"""
import subprocess
import sys

cmd = [sys.executable, "-m", "splitter_sets", "search", "--min", "10000", "--max", "80000",
       "--k1", "3", "--k2", "5", "--jobs", "4", "--only-exists"]
print("$ splitter-sets " + " ".join(cmd[3:]), flush=True)
subprocess.run(cmd, check=True)
