#!/usr/bin/env python3
"""Regenerate the reference b-files in data/.

These are offline stand-ins for the real OEIS b-files (download links in
data/README.md).  They are built from classical recurrences that share no
code with the gridfree package, so the oeis-check comparisons stay a real
cross-check even without network access:

* A035607 and A110110 come from the Delannoy array
  D(m,j) = D(m-1,j) + D(m,j-1) + D(m-1,j-1), D(m,0) = D(0,j) = 1:
  the count of points in Z^d with l1 norm exactly j is D(d,j) - D(d,j-1),
  and the 2 x n selection counts are these lattice-point counts with
  d = n - k + 1.  Row maxima are taken as plain maxima over each row.
* A006318 (large Schroeder) uses
  (n+1)*S(n) = 3*(2n-1)*S(n-1) - (n-2)*S(n-2), S(0) = 1, S(1) = 2.
"""

from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

TRIANGLE_ROWS = 25   # rows 0..24: 325 terms
ROWMAX_TERMS = 41    # n = 0..40
SCHROEDER_TERMS = 41 # S(0)..S(40)


def delannoy(size):
    d = [[1] * (size + 1) for _ in range(size + 1)]
    for m in range(1, size + 1):
        for j in range(1, size + 1):
            d[m][j] = d[m - 1][j] + d[m][j - 1] + d[m - 1][j - 1]
    return d


def norm_count(d, dim, j):
    """Lattice points of Z^dim with l1 norm exactly j."""
    if j == 0:
        return 1
    return d[dim][j] - d[dim][j - 1]


def triangle_rows(d, rows):
    for n in range(rows):
        yield [norm_count(d, n - k + 1, k) for k in range(n + 1)]


def main():
    DATA.mkdir(exist_ok=True)
    d = delannoy(ROWMAX_TERMS + 2)

    flat = [v for row in triangle_rows(d, TRIANGLE_ROWS) for v in row]
    lines = ["# A035607 prefix (offline stand-in; see data/README.md)"]
    lines += [f"{i} {v}" for i, v in enumerate(flat)]
    (DATA / "b035607.txt").write_text("\n".join(lines) + "\n")

    maxima = [max(row) for row in triangle_rows(d, ROWMAX_TERMS)]
    lines = ["# A110110 prefix (offline stand-in; see data/README.md)"]
    lines += [f"{i} {v}" for i, v in enumerate(maxima)]
    (DATA / "b110110.txt").write_text("\n".join(lines) + "\n")

    s = [1, 2]
    for n in range(2, SCHROEDER_TERMS):
        s.append((3 * (2 * n - 1) * s[n - 1] - (n - 2) * s[n - 2]) // (n + 1))
    lines = ["# A006318 prefix (offline stand-in; see data/README.md)"]
    lines += [f"{i} {v}" for i, v in enumerate(s)]
    (DATA / "b006318.txt").write_text("\n".join(lines) + "\n")

    print(f"wrote 3 b-files under {DATA}")


if __name__ == "__main__":
    main()
