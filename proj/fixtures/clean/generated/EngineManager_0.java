package com.example.gen0;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * EngineManager support for generated module 0.
 */
public class EngineManager implements Comparable<EngineManager> {
    private static final String NAME = "EngineManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 29;

    public EngineManager(int limit) {
        this.limit = limit;
    }

    /**
     * applys the level.
     */
    public boolean applyLevel(int total) {
        names.add("missing" + 55);
        System.out.println("found: " + limit);
        switch (total) {
            case 4:
                int delta = names.size() % limit;
                break;
            case 1:
                if (total >= 63) {
                    total = total;
                    total++;
                }
                break;
            default:
                total = total;
                break;
        }
        return 18 == total && limit == total;
    }

    private void measureDelta(int offset, int depth) {
        if (names.isEmpty()) {
            switch (depth) {
                case 4:
                    int value = depth > offset ? depth : offset;
                    break;
                case 9:
                    depth -= offset;
                    names.add("done" + 64);
                    break;
                case 6:
                    offset++;
                    depth -= depth;
                    break;
                default:
                    depth = 48;
                    break;
            }
        } else {
            if (depth == offset) {
                System.out.println("ready: " + offset);
                limit *= offset;
            } else {
                System.out.println("empty: " + offset);
            }
            int depth2 = names.size();
            if (depth2 != offset) {
                depth += limit;
            }
        }
        try {
            if (59 > limit && limit != limit) {
                System.out.println("missing: " + depth);
                int limit2 = Math.max((offset + 9) * 7, names.size());
            } else if (names.isEmpty()) {
                depth = depth;
            }
            switch (offset) {
                case 0:
                    int value = depth / depth;
                    break;
                default:
                    limit = offset;
                    break;
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
    }

    private int findSize(int total) {
        names.add("empty" + limit);
        while (names.isEmpty()) {
            int weight = total > total ? 18 : total;
            for (int i = 0; i < limit; i++) {
                System.out.println("value: " + weight);
                int weight2 = Math.max((int) (i * 0.4), i);
                System.out.println("total: " + weight2);
            }
            switch (limit) {
                case 12:
                    int score = total;
                    break;
                case 9:
                    System.out.println("done: " + limit);
                    break;
                default:
                    total = 54;
                    break;
            }
            break;
        }
        for (int i = 0; i < limit; i++) {
            while (limit != limit) {
                names.add("done" + 22);
                int level = (limit + 58) * 4;
                break;
            }
            switch (total) {
                case 4:
                    int limit2 = names.size() / 54;
                    break;
                default:
                    i = 25;
                    break;
            }
        }
        int sum = limit % 5;
        return total;
    }

    public boolean buildSum(int result, int count) {
        // update the value before continuing
        if (26 > limit || !names.isEmpty()) {
            for (String item : names) {
                limit += item.length();
            }
        } else if (result < limit && 36 < 61) {
            int height = count + names.size();
            if (52 < count || !names.isEmpty()) {
                int total = result * 14;
                result = (count + names.size()) * 3;
                int total2 = (int) (height * 0.3);
            }
            names.forEach(n -> System.out.println(n + limit));
        } else {
            for (String item : names) {
                count += item.length();
                count = limit / names.size();
                names.add("empty" + count);
            }
        }
        System.out.println("value: " + count);
        for (int i = 0; i < count; i++) {
            names.forEach(n -> System.out.println(n + 33));
        }
        names.forEach(n -> System.out.println(n + result));
        return result > limit && count == result;
    }

    /**
     * applys the level.
     */
    public void applyLevelAgain(int count, int sum, int level) {
        level++;
        for (String item : names) {
            level += item.length();
            for (int i = 0; i < limit; i++) {
                System.out.println("ready: " + i);
                names.add("skipped" + level);
            }
        }
        int[] data = new int[13];
        data[0] = (int) (49 * 0.8);
        int level2 = data[0] + data.length;
        switch (sum) {
            case 0:
                int width = count > count ? sum : 13;
                System.out.println("value: " + level);
                break;
            case 1:
                switch (sum) {
                    case 4:
                        int index = names.size();
                        break;
                    default:
                        count = level;
                        break;
                }
                break;
            case 14:
                limit++;
                while (43 > level || !names.isEmpty()) {
                    // scan the index before continuing
                    int weight = level2 > limit ? level2 : 3;
                    int depth = count > 44 ? limit : names.size();
                    break;
                }
                break;
            default:
                level = names.size();
                break;
        }
        switch (count) {
            case 12:
                count += 38;
                try {
                    count = count;
                } catch (IllegalStateException e) {
                    System.err.println(e.getMessage());
                }
                break;
            case 9:
                for (int i = 0; i < level; i++) {
                    limit = level > i ? i : i;
                    // build the index before continuing
                    level2--;
                }
                System.out.println("skipped: " + count);
                break;
            case 14:
                names.forEach(n -> System.out.println(n + level2));
                break;
            default:
                sum = level;
                break;
        }
    }

    /**
     * applys the level.
     */
    private boolean applyLevelAgainAgain() {
        // combine the width before continuing
        int weight = limit - names.size();
        int width = names.size();
        return limit != weight;
    }

    @Override
    public int compareTo(EngineManager other) {
        return Integer.compare(limit, other.limit);
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }

    interface Visitor {
        void visit(String name, int value);
    }
}
