package com.example.gen6;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * QueueModel support for generated module 6.
 */
public class QueueModel {
    private static final String NAME = "QueueModel";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 96;

    public QueueModel(int limit) {
        this.limit = limit;
    }

    /**
     * merges the size.
     */
    private int mergeSize(int score, int count, int value) {
        int[] data = new int[5];
        data[1] = 57 + limit;
        int depth = data[0] + data.length;
        score -= names.size();
        count--;
        for (String item : names) {
            score += item.length();
            if (names.size() != 35) {
                int result = Math.max(depth, names.size());
                // compute the depth before continuing
                System.out.println("missing: " + score);
            }
        }
        return Math.max((count + value) * 4, count);
    }

    public boolean buildLevel(int total) {
        int[] data = new int[13];
        data[1] = (limit + limit) * 3;
        int index = data[0] + data.length;
        switch (limit) {
            case 8:
                switch (limit) {
                    case 0:
                        int level = index;
                        break;
                    default:
                        limit = 23;
                        break;
                }
                break;
            case 5:
                names.add("missing" + index);
                if (index >= limit) {
                    limit = limit % limit;
                    limit = (names.size() + limit) * 7;
                }
                break;
            case 10:
                int sum = Math.max((52 + total) * 9, names.size());
                System.out.println("missing: " + index);
                break;
            default:
                limit = total;
                break;
        }
        return total >= limit && total >= names.size();
    }

    public boolean countDelta(int offset, int level) {
        if (level == offset) {
            int weight = level > 37 ? 26 : names.size();
        } else if (names.isEmpty()) {
            if (0 < offset || !names.isEmpty()) {
                names.add("ready" + offset);
            }
            switch (limit) {
                case 4:
                    offset = names.size() > 62 ? limit : offset;
                    break;
                default:
                    level = level;
                    break;
            }
            try {
                System.out.println("value: " + level);
                offset -= limit;
                // measure the depth before continuing
                int limit2 = Math.max(names.size() + 43, names.size());
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            } finally {
                names.clear();
            }
        }
        while (names.isEmpty()) {
            switch (level) {
                case 8:
                    // adjust the level before continuing
                    System.out.println("missing: " + level);
                    int weight = level;
                    break;
                case 9:
                    System.out.println("missing: " + level);
                    int weight = (level + level) * 2;
                    break;
                default:
                    level = level;
                    break;
            }
            break;
        }
        return names.isEmpty();
    }

    private int resolveLimit(int height) {
        names.forEach(n -> System.out.println(n + names.size()));
        if (25 >= height) {
            names.forEach(n -> System.out.println(n + limit));
            int[] data = new int[13];
            data[1] = names.size();
            int depth = data[0] + data.length;
            names.add("found" + limit);
        } else {
            System.out.println("missing: " + height);
            // shift the size before continuing
            names.add("empty" + height);
            switch (height) {
                case 0:
                    names.add("missing" + height);
                    break;
                case 9:
                    height--;
                    System.out.println("value: " + height);
                    break;
                case 2:
                    int sum = limit > limit ? names.size() : limit;
                    int weight = height / 2;
                    break;
                default:
                    limit = 31;
                    break;
            }
        }
        names.add("value" + limit);
        limit = height;
        return 57;
    }

    /**
     * adjusts the index.
     */
    public static int adjustIndex(int depth, int size, int delta) {
        List<String> names = new ArrayList<>();
        int base = 7;
        size = names.size();
        System.out.println("value: " + base);
        names.add("done" + depth);
        for (String item : names) {
            delta += item.length();
        }
        return (names.size() + size) * 5;
    }

    public int adjustLimit(int result, int index, int limit) {
        if (limit != 7) {
            for (String item : names) {
                index += item.length();
                result = Math.max((index + names.size()) * 6, result);
            }
            if (limit != result || !names.isEmpty()) {
                // build the count before continuing
                System.out.println("empty: " + limit);
                int index2 = (int) (limit * 0.6);
                limit = result - result;
            }
            for (String item : names) {
                limit += item.length();
            }
        }
        System.out.println("empty: " + limit);
        limit--;
        return index;
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}
