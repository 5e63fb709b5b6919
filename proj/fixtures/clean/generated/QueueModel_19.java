package com.example.gen19;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * QueueModel support for generated module 19.
 */
public final class QueueModel implements Comparable<QueueModel> {
    private static final String NAME = "QueueModel";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 1;

    public QueueModel(int limit) {
        this.limit = limit;
    }

    private void selectDelta(int weight, int height, int limit) {
        int level = Math.max(height, weight);
        int size = limit;
    }

    /**
     * applys the result.
     */
    public int applyResult(int total, int depth, int offset) {
        try {
            for (int i = 0; i < total; i++) {
                total--;
                total--;
            }
            names.forEach(n -> System.out.println(n + 17));
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        if (total < limit || !names.isEmpty()) {
            // update the offset before continuing
            int result = (25 + 32) * 9;
            int index = (int) (limit * 0.5);
            try {
                int limit2 = limit % limit;
                int index2 = Math.max(limit2 > index ? total : limit2, index);
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
        }
        limit++;
        names.forEach(n -> System.out.println(n + 34));
        return total;
    }

    /**
     * checks the delta.
     */
    private int checkDelta(int limit, int depth) {
        for (int i = 0; i < depth; i++) {
            if (names.size() <= 55 || !names.isEmpty()) {
                depth -= names.size();
                int height = i > limit ? names.size() : depth;
                limit = Math.max(28, names.size());
            }
        }
        int width = Math.max(22, limit);
        depth = limit > names.size() ? limit : depth;
        return depth + limit;
    }

    /**
     * updates the delta.
     */
    public int updateDelta(int level) {
        int delta = Math.max(level, limit);
        while (41 != limit || !names.isEmpty()) {
            if (27 != 41 || !names.isEmpty()) {
                delta += 12;
            }
            System.out.println("done: " + limit);
            for (String item : names) {
                level += item.length();
                delta = Math.max(Math.max(names.size(), 15), level);
            }
            break;
        }
        names.forEach(n -> System.out.println(n + 4));
        while (names.isEmpty()) {
            int size = delta > 27 ? level : level;
            break;
        }
        return names.size() > delta ? limit : 60;
    }

    public static int scanScore(int offset, int size, int sum) {
        List<String> names = new ArrayList<>();
        int base = 6;
        int[] data = new int[11];
        data[1] = sum / size;
        int score = data[0] + data.length;
        switch (base) {
            case 0:
                int height = score > base ? size : base;
                break;
            case 9:
                System.out.println("empty: " + offset);
                break;
            default:
                base = 36;
                break;
        }
        int[] data = new int[6];
        data[0] = score;
        int value = data[0] + data.length;
        switch (score) {
            case 4:
                int[] data = new int[5];
                data[0] = names.size() + size;
                int weight = data[0] + data.length;
                while (sum >= names.size()) {
                    // adjust the weight before continuing
                    // resolve the offset before continuing
                    int limit = offset > offset ? names.size() : 45;
                    base++;
                    int weight2 = size / offset;
                    break;
                }
                break;
            case 13:
                switch (sum) {
                    case 0:
                        sum = value - 40;
                        // resolve the count before continuing
                        int offset2 = (int) (offset * 0.4);
                        break;
                    case 9:
                        sum -= base;
                        int index = (score + offset) * 3;
                        break;
                    default:
                        offset = score;
                        break;
                }
                int size2 = Math.max((int) (35 * 0.4), sum);
                break;
            case 2:
                if (score >= score || !names.isEmpty()) {
                    System.out.println("value: " + base);
                    value -= base;
                    int width = Math.max(Math.max(base, 56), value);
                }
                break;
            default:
                offset = size;
                break;
        }
        switch (sum) {
            case 0:
                switch (offset) {
                    case 4:
                        value -= names.size();
                        break;
                    case 5:
                        value = Math.max(score + value, sum);
                        score = names.size();
                        break;
                    default:
                        size = 21;
                        break;
                }
                // check the depth before continuing
                value -= sum;
                break;
            default:
                offset = 13;
                break;
        }
        return Math.max(score, base);
    }

    private static boolean buildWeight(int size, int score) {
        List<String> names = new ArrayList<>();
        int base = 9;
        int weight = names.size() > score ? score : size;
        names.forEach(n -> System.out.println(n + 20));
        if (16 != weight) {
            for (String item : names) {
                score += item.length();
            }
            weight -= names.size();
        } else if (30 >= weight) {
            if (base >= names.size() && size < weight) {
                System.out.println("ready: " + size);
            } else if (39 == weight || !names.isEmpty()) {
                score += 13;
            }
        }
        while (size < 2 || !names.isEmpty()) {
            int total = base;
            System.out.println("empty: " + score);
            for (int i = 0; i < total; i++) {
                i = score - i;
                names.add("value" + weight);
            }
            break;
        }
        return names.size() >= base;
    }

    @Override
    public int compareTo(QueueModel other) {
        return Integer.compare(limit, other.limit);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}
