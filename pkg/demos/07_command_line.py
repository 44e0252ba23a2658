# %% [markdown]
# # Command line
#
# The same computations run from the shell, e.g.
#
#     bounded-paths fk --steps "1:t,-1:t" --kmax 4
#     bounded-paths recurrence --steps "0:0,1:t1,-1:t1,2:t2,-2:t2" --verify
#     bounded-paths graph --steps "1:t,-1:t" --which H > h.dot
#
# Here they are driven in-process through `run`, which returns the exit code
# and the document that would be printed.

# %%
from bounded_paths.cli import RunConfig, run

code, doc = run(RunConfig(steps="1:t,-1:t", command="fk", kmax=4))
print(code, doc)

code, doc = run(RunConfig(steps="0:0,1:t1,-1:t1,2:t2,-2:t2", command="recurrence", verify=True))
print(code, doc)

code, doc = run(RunConfig(steps="1:t,-1:t", command="symmetric", kmax=3, output="json"))
print(code, doc[:400])

code, doc = run(RunConfig(steps="1:t,-1:t", command="graph", output="dot"))
print(code, doc)
