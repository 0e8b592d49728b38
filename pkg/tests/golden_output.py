"""Expected results for the unit group reports."""

t39_structures = {
    1: "C3^2 x C2 x GL(3,F3)^4",
    2: "C3^4 x C8 x GL(3,F9)^4",
    3: "C3^6 x C26 x GL(3,F27)^4",
}

t21_structures = {
    1: "C3^2 x C2 x GL(3,F9)",
    2: "C3^4 x C8 x GL(3,F9)^2",
}

t39_order_n1 = 286484338015469568

t21_order_n1 = 6113802240

t21_json_n1 = {
    "m": 7,
    "t": 2,
    "n": 1,
    "q": "3",
    "factors": [
        {"kind": "C", "order": "3", "multiplicity": 2},
        {"kind": "C", "order": "2", "multiplicity": 1},
        {"kind": "GL", "degree": 3, "field_order": "9", "multiplicity": 1},
    ],
    "total_order": "6113802240",
}

t39_table_rst = [
    ".. csv-table:: Unit groups of F_q T_39 (m=13, t=3, k=4)\n",
    '    :header: "m", "t", "k", "n", "Unit group", "Order"\n',
    "    :quote: “\n\n",
    "    “13“, “3“, “4“, “1“, “C3^2 x C2 x GL(3,F3)^4“, “286484338015469568“\n",
    "\n",
    "The C3 factor has multiplicity 2n: |1 + J(FG)| = q^2 and (1 + j)^3 = 1.\n",
]

t21_structure_rst = [
    ".. csv-table::\n",
    '    :header: "m", "t", "k", "n", "Unit group", "Order"\n',
    "    :quote: “\n\n",
    "    “7“, “2“, “2“, “1“, “C3^2 x C2 x GL(3,F9)“, “6113802240“\n",
    "\n",
    "The C3 factor has multiplicity 2n: |1 + J(FG)| = q^2 and (1 + j)^3 = 1.\n",
]

t21_classes_text = [
    "T_21 (m=7, t=2, k=2): 5 conjugacy classes\n",
    "[1] 1\n",
    "[3] x, x^2, x^4\n",
    "[3] x^3, x^5, x^6\n",
    "[7] y, x y, x^2 y, x^3 y, x^4 y, x^5 y, x^6 y\n",
    "[7] y^2, x y^2, x^2 y^2, x^3 y^2, x^4 y^2, x^5 y^2, x^6 y^2\n",
]

params_text_13 = [
    "m=7 t=2 k=2\n",
    "m=7 t=4 k=2\n",
    "m=13 t=3 k=4\n",
    "m=13 t=9 k=4\n",
]
