"""Summary statistics and table export on the bundled reference records.

The package ships six characterized voids from a real structural-collapse
survey (see voidscan.fixtures). This demo reproduces their published
summary averages and the survey-style CSV.

Run from the repo root:  python demos/04_reference_table.py
"""

from voidscan.fixtures import REFERENCE_PILE_DEPTH, reference_void_records
from voidscan.voids import summarize, void_table_csv

records = reference_void_records()
print(void_table_csv(records))

stats = summarize([m for _, m in records], REFERENCE_PILE_DEPTH,
                  connectivity_components=len(records))
print(f"count:             {stats.count}")
print(f"mean max height:   {stats.mean_max_height:.2f} m")
print(f"mean min height:   {stats.mean_min_height:.2f} m")
print(f"mean cross width:  {stats.mean_cross_width:.2f} m  "
      f"(pooled over both widths of every void)")
print(f"max pile depth:    {stats.max_pile_depth:.1f} m")
print(f"surface access:    {'yes' if stats.any_surface_access else 'none observed'}")
print()
print("Heights under a meter and a half and no surface entrances: a robot")
print("working these spaces must burrow, and stay small.")
