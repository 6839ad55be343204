"""Writes coimbra_synthetic.csv: 116 rows in the UCI Coimbra column layout.

The ten sample patients sit at their published row positions; every other row
is seeded random data in plausible ranges. Rows 1-52 are labelled 1 (healthy
control) and rows 53-116 are labelled 2 (patient), as in the public file.
This is a stand-in for the real dataset, which is not redistributed here.
"""

import random

SAMPLES = {
    3: (82, 23.12, 4.50, 17.94, 22.43),
    11: (49, 23.01, 5.66, 35.59, 26.72),
    19: (64, 34.53, 4.43, 21.21, 5.46),
    31: (66, 36.21, 15.53, 74.71, 7.54),
    45: (71, 30.30, 8.34, 56.50, 8.13),
    60: (62, 22.66, 3.48, 9.86, 11.24),
    71: (44, 24.74, 58.46, 18.16, 16.10),
    82: (71, 25.51, 10.40, 19.07, 5.49),
    91: (82, 31.22, 18.08, 31.65, 9.92),
    104: (57, 34.84, 12.55, 33.16, 2.36),
}

rng = random.Random(20240116)
lines = ["Age,BMI,Glucose,Insulin,HOMA,Leptin,Adiponectin,Resistin,MCP.1,Classification"]
for row in range(1, 117):
    if row in SAMPLES:
        age, bmi, ins, lep, adp = SAMPLES[row]
    else:
        age = rng.randint(24, 89)
        bmi = round(rng.uniform(18.3, 38.6), 2)
        ins = round(rng.uniform(2.4, 58.5), 3)
        lep = round(rng.uniform(4.3, 90.3), 4)
        adp = round(rng.uniform(1.7, 38.0), 4)
    glucose = rng.randint(60, 201)
    homa = round(glucose * ins / 405.0, 6)
    resistin = round(rng.uniform(3.2, 82.1), 4)
    mcp = round(rng.uniform(45.8, 1698.4), 3)
    label = 1 if row <= 52 else 2
    lines.append(f"{age},{bmi},{glucose},{ins},{homa},{lep},{adp},{resistin},{mcp},{label}")

with open("coimbra_synthetic.csv", "w", newline="\n") as f:
    f.write("\n".join(lines) + "\n")
