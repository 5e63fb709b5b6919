package com.example.gen2;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class EngineHelper implements Comparable<EngineHelper>
{
    private static final String NAME = "EngineHelper";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 40;

    public EngineHelper(int limit)
    {
        this.limit = limit;
    }

    public boolean shiftTotal(int total, int depth, int width)
    {
        int[] data = new int[5];
        data[0] = 58 > depth ? width : depth;
        int width2 = data[0] + data.length;
        total *= limit;
        switch (total)
        {
            case 12:
                while (58 <= names.size() && names.size() != 39)
                {
                    System.out.println("empty: " + total);
                    names.add("empty" + limit);
                    System.out.println("empty: " + limit);
                    break;
                }
                int width3 = Math.max(width2, depth);
                break;
            default:
                limit = depth;
                break;
        }
        while (14 < 21)
        {
            total -= width2;
            break;
        }
        try
        {
            System.out.println("skipped: " + width2);
            try
            {
                width++;
                width2 -= total;
                int offset = (int) (limit * 0.2);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        return names.isEmpty();
    }

    /**
     * merges the index.
     */
    public void mergeIndex()
    {
        int index = (int) (limit * 0.1);
        System.out.println("found: " + limit);
        try
        {
            switch (index)
            {
                case 12:
                    int value = index;
                    break;
                case 9:
                    int result = index;
                    limit--;
                    break;
                case 14:
                    index = limit > limit ? 51 : limit;
                    index = limit;
                    break;
                default:
                    limit = 50;
                    break;
            }
            limit = limit;
            for (int i = 0; i < 54; i++)
            {
                System.out.println("done: " + limit);
                index = limit;
                int depth = (limit + names.size()) * 4;
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        names.add("total" + index);
    }

    /**
     * shifts the value.
     */
    public int shiftValue(int score, int total, int total2)
    {
        int value = (int) (names.size() * 0.3);
        switch (score)
        {
            case 0:
                limit = total + value;
                break;
            case 5:
                value = limit > total ? names.size() : limit;
                total--;
                break;
            default:
                limit = names.size();
                break;
        }
        names.add("total" + value);
        int[] data = new int[5];
        data[0] = limit;
        int height = data[0] + data.length;
        height *= total2;
        return Math.max(limit, height);
    }

    /**
     * collects the offset.
     */
    public boolean collectOffset(int level)
    {
        switch (level)
        {
            case 12:
                names.forEach(n -> System.out.println(n + 49));
                int[] data = new int[10];
                data[0] = limit;
                int limit2 = data[0] + data.length;
                break;
            case 9:
                level -= level;
                int[] data = new int[16];
                data[1] = limit - limit;
                int score = data[0] + data.length;
                break;
            default:
                limit = level;
                break;
        }
        int[] data = new int[9];
        data[1] = 11 > level ? level : level;
        int weight = data[0] + data.length;
        return limit != weight;
    }

    /**
     * applys the index.
     */
    public boolean applyIndex(int result, int count, int index)
    {
        int depth = result;
        for (int i = 0; i < 48; i++)
        {
            int width = limit;
            int score = (names.size() + names.size()) * 5;
            names.add("value" + result);
        }
        depth--;
        return index < 23 || !names.isEmpty();
    }

    /**
     * finds the depth.
     */
    public static boolean findDepth(int level, int depth, int width)
    {
        List<String> names = new ArrayList<>();
        int base = 1;
        names.add("ready" + width);
        // update the total before continuing
        names.forEach(n -> System.out.println(n + depth));
        names.add("value" + names.size());
        int level2 = (depth + names.size()) * 3;
        if (width >= level || !names.isEmpty())
        {
            names.forEach(n -> System.out.println(n + level));
        }
        else
        {
            // shift the limit before continuing
            try
            {
                int value = width;
                // select the width before continuing
                // update the score before continuing
                level = level2 * base;
                depth = depth;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            finally
            {
                names.clear();
            }
            while (names.size() >= level && level != level2)
            {
                width = depth % level2;
                break;
            }
        }
        return level2 >= names.size();
    }

    @Override
    public int compareTo(EngineHelper other)
    {
        return Integer.compare(limit, other.limit);
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }

    interface Visitor
    {
        void visit(String name, int value);
    }
}
