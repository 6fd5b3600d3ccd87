"""Reference coefficient tables for the Klein configuration (scaled values).

Columns are mu*Q_j for the cubic monomials mu in lex order, j = 1, 2, 3;
rows are the products P2Q3, P3Q2, P3Q1, P1Q3, P1Q2, P2Q1.
"""

ROWS = [(2, 3), (3, 2), (3, 1), (1, 3), (1, 2), (2, 1)]

COLUMNS = [
    (mu, j)
    for mu in ["x^3", "x^2y", "x^2z", "xy^2", "xyz", "xz^2", "y^3", "y^2z", "yz^2", "z^3"]
    for j in (1, 2, 3)
]

# one string per (row, column); "0" for blank cells
TABLE = {
    (2, 3): ["0", "0", "2c+12", "0", "15c-6", "0", "0", "0", "0", "0",
             "0", "15c-6", "5c-2", "0", "0", "0", "0", "5c-2", "0", "-12c-72",
             "0", "0", "0", "0", "0", "5c-2", "0", "0", "0", "0"],
    (3, 2): ["0", "0", "15c-6", "0", "15c-6", "0", "0", "0", "0", "0",
             "0", "15c-6", "5c-2", "0", "0", "0", "0", "-8c+16", "0", "2c+12",
             "0", "0", "0", "0", "0", "5c-2", "0", "0", "0", "0"],
    (3, 1): ["0", "0", "0", "5c-2", "0", "0", "0", "0", "-8c+16", "0",
             "0", "0", "0", "5c-2", "0", "0", "0", "0", "2c+12", "0",
             "0", "0", "0", "15c-6", "15c-6", "0", "0", "0", "0", "15c-6"],
    (1, 3): ["0", "0", "0", "5c-2", "0", "0", "0", "0", "5c-2", "0",
             "0", "0", "0", "5c-2", "0", "0", "0", "0", "-12c-72", "0",
             "0", "0", "0", "15c-6", "15c-6", "0", "0", "0", "0", "2c+12"],
    (1, 2): ["15c-6", "0", "0", "0", "0", "0", "0", "15c-6", "0", "5c-2",
             "0", "0", "0", "0", "5c-2", "2c+12", "0", "0", "0", "0",
             "0", "0", "5c-2", "0", "0", "0", "0", "0", "2c+12", "0"],
    (2, 1): ["2c+12", "0", "0", "0", "0", "0", "0", "2c+12", "0", "5c-2",
             "0", "0", "0", "0", "5c-2", "15c-6", "0", "0", "0", "0",
             "0", "0", "5c-2", "0", "0", "0", "0", "0", "15c-6", "0"],
}
