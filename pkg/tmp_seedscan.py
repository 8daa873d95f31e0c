import sys, time, json
sys.path.insert(0, "src")
from tforge.search import search_starter
from tforge.starters import starter_to_obj
for seed in range(0, 48):
    t0 = time.time()
    r = search_starter("frgbtd", {"t": 7, "seed": seed}, budget=500_000, count=1)
    print("seed=%2d found=%d nodes=%d %.1fs" % (seed, len(r.starters), r.nodes, time.time()-t0), flush=True)
    if r.starters:
        print(json.dumps(starter_to_obj(r.starters[0])), flush=True)
        break
